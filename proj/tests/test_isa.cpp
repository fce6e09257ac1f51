#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sisa/isa.hpp"

using namespace sisa::isa;

namespace {

// Field packing written out independently of the codec.
std::uint32_t pack(unsigned op, unsigned rs1, unsigned rs2, unsigned rd) {
  return (op << 25) | (rs2 << 20) | (rs1 << 15) | (rd << 7) | 0x16u;
}

Instruction ins(unsigned op, unsigned rs1, unsigned rs2, unsigned rd) {
  return {static_cast<Opcode>(op), static_cast<std::uint8_t>(rs1),
          static_cast<std::uint8_t>(rs2), static_cast<std::uint8_t>(rd)};
}

}  // namespace

TEST_CASE("encode examples") {
  CHECK(encode(ins(0x4, 1, 2, 3)) == 0x08208196u);
  CHECK(pack(0x4, 1, 2, 3) == 0x08208196u);
  CHECK(encode(ins(0x0, 0, 0, 0)) == 0x00000016u);
  CHECK(encode(ins(0x7F, 31, 31, 31)) == 0xFFFF8F96u);
  CHECK(pack(0x7F, 31, 31, 31) == 0xFFFF8F96u);
}

TEST_CASE("encode rejects overflowing fields") {
  CHECK_THROWS(encode(ins(0x80, 0, 0, 0)));
  CHECK_THROWS(encode(ins(0, 32, 0, 0)));
  CHECK_THROWS(encode(ins(0, 0, 32, 0)));
  CHECK_THROWS(encode(ins(0, 0, 0, 32)));
}

TEST_CASE("decode examples") {
  const auto i = decode(0x08208196u);
  CHECK(i.opcode == Opcode::IntersectDbDb);
  CHECK(i.rs1 == 1);
  CHECK(i.rs2 == 2);
  CHECK(i.rd == 3);
  CHECK_THROWS_AS(decode(0x00000000u), DecodeError);
  CHECK_THROWS_AS(decode(pack(0x40, 0, 0, 0)), DecodeError);
  try {
    decode(pack(0x40, 0, 0, 0));
  } catch (const DecodeError &e) {
    CHECK(std::string(e.what()).find("0x0") != std::string::npos);
  }
}

TEST_CASE("round trip over every opcode") {
  std::mt19937_64 rng(1);
  for (unsigned op = 0; op < kNumOpcodes; ++op)
    for (int r = 0; r < 2000; ++r) {
      const auto i = ins(op, rng() % 32, rng() % 32, rng() % 32);
      const auto w = encode(i);
      CHECK((w & 0x7Fu) == kCustomOpcode);
      CHECK(w == pack(op, i.rs1, i.rs2, i.rd));
      CHECK(decode(w) == i);
    }
}

TEST_CASE("encode is injective") {
  std::set<std::uint32_t> seen;
  for (unsigned op = 0; op < kNumOpcodes; ++op)
    for (unsigned a = 0; a < 32; a += 3)
      for (unsigned b = 0; b < 32; b += 5)
        for (unsigned d = 0; d < 32; d += 7) CHECK(seen.insert(encode(ins(op, a, b, d))).second);
}

TEST_CASE("raw word streams") {
  const std::vector<Instruction> two = {ins(0, 1, 2, 3), ins(4, 5, 6, 7)};
  const auto bytes = encode_words(two);
  CHECK(bytes.size() == 8);
  CHECK(bytes[0] == (encode(two[0]) & 0xFF));  // little endian
  CHECK(decode_words(bytes) == two);
  CHECK(encode_words({}).empty());
  CHECK(decode_words({}).empty());
  auto partial = bytes;
  partial.pop_back();
  CHECK_THROWS_AS(decode_words(partial), DecodeError);
}

TEST_CASE("trace files") {
  std::mt19937_64 rng(9);
  std::vector<Instruction> many;
  for (int i = 0; i < 1000000; ++i)
    many.push_back(ins(rng() % kNumOpcodes, rng() % 32, rng() % 32, rng() % 32));
  std::stringstream ss;
  write_trace(ss, many);
  const std::string blob = ss.str();
  CHECK(blob.substr(0, 4) == "SISA");
  CHECK(blob[4] == 1);
  CHECK(blob.size() == 5 + 4 * many.size());
  CHECK(read_trace(ss) == many);

  std::stringstream empty;
  write_trace(empty, {});
  CHECK(read_trace(empty).empty());

  std::stringstream bad("SISA\x01\x16\x00");
  CHECK_THROWS_AS(read_trace(bad), DecodeError);
  std::stringstream wrong("ABCD\x01");
  CHECK_THROWS_AS(read_trace(wrong), DecodeError);
}

TEST_CASE("text listing") {
  for (unsigned op = 0; op < kNumOpcodes; ++op) {
    const auto i = ins(op, 3, 4, 5);
    CHECK(from_text(to_text(i)) == i);
  }
  CHECK(from_text("isect.dbdb 3 1 2") == ins(4, 1, 2, 3));
  CHECK(from_text("0x4 3 1 2") == ins(4, 1, 2, 3));
  CHECK_THROWS(from_text("bogus 1 2 3"));
  CHECK_THROWS(from_text("union 1 2"));
}
