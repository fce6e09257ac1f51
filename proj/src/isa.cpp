#include "sisa/isa.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace sisa::isa {
namespace {

constexpr std::array<const char *, kNumOpcodes> kMnemonics = {
    "isect.merge", "isect.gallop", "isect.auto", "isect.sadb", "isect.dbdb",
    "db.add",      "db.rm",        "union",      "diff",       "isect.card",
    "union.card",  "diff.card",    "member",
};

std::string valid_opcode_list() {
  std::ostringstream os;
  for (std::size_t i = 0; i < kNumOpcodes; ++i) {
    if (i) os << ", ";
    os << "0x" << std::hex << i << " (" << kMnemonics[i] << ")";
  }
  return os.str();
}

std::uint8_t parse_field(const std::string &tok, unsigned limit,
                         const char *what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos, 0);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != tok.size() || v >= limit)
    throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
  return static_cast<std::uint8_t>(v);
}

}  // namespace

bool is_defined(std::uint8_t opcode) { return opcode < kNumOpcodes; }

const char *mnemonic(Opcode op) {
  const auto i = static_cast<std::size_t>(op);
  return i < kNumOpcodes ? kMnemonics[i] : "unknown";
}

std::optional<Opcode> opcode_from_mnemonic(const std::string &name) {
  for (std::size_t i = 0; i < kNumOpcodes; ++i)
    if (name == kMnemonics[i]) return static_cast<Opcode>(i);
  return std::nullopt;
}

std::uint32_t encode(const Instruction &instr) {
  const auto op = static_cast<std::uint32_t>(instr.opcode);
  if (op >= 0x80) throw std::invalid_argument("opcode does not fit in 7 bits");
  if (instr.rs1 >= 32 || instr.rs2 >= 32 || instr.rd >= 32)
    throw std::invalid_argument("register index does not fit in 5 bits");
  return op << 25 | std::uint32_t{instr.rs2} << 20 |
         std::uint32_t{instr.rs1} << 15 | std::uint32_t{instr.rd} << 7 |
         kCustomOpcode;
}

Instruction decode(std::uint32_t word) {
  if ((word & 0x7F) != kCustomOpcode) {
    std::ostringstream os;
    os << "not a set instruction: word 0x" << std::hex << word
       << " has major opcode 0x" << (word & 0x7F) << ", expected 0x16";
    throw DecodeError(os.str());
  }
  const auto op = static_cast<std::uint8_t>(word >> 25);
  if (!is_defined(op)) {
    std::ostringstream os;
    os << "unknown set opcode 0x" << std::hex << unsigned{op}
       << "; valid opcodes: " << valid_opcode_list();
    throw DecodeError(os.str());
  }
  Instruction i;
  i.opcode = static_cast<Opcode>(op);
  i.rs2 = static_cast<std::uint8_t>((word >> 20) & 0x1F);
  i.rs1 = static_cast<std::uint8_t>((word >> 15) & 0x1F);
  i.rd = static_cast<std::uint8_t>((word >> 7) & 0x1F);
  return i;
}

std::vector<std::uint8_t> encode_words(std::span<const Instruction> instrs) {
  std::vector<std::uint8_t> out;
  out.reserve(instrs.size() * 4);
  for (const auto &i : instrs) {
    const std::uint32_t w = encode(i);
    for (int b = 0; b < 4; ++b)
      out.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
  }
  return out;
}

std::vector<Instruction> decode_words(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 4 != 0)
    throw DecodeError("trailing partial instruction word (" +
                      std::to_string(bytes.size() % 4) + " bytes)");
  std::vector<Instruction> out;
  out.reserve(bytes.size() / 4);
  for (std::size_t off = 0; off < bytes.size(); off += 4) {
    std::uint32_t w = 0;
    for (int b = 0; b < 4; ++b) w |= std::uint32_t{bytes[off + b]} << (8 * b);
    out.push_back(decode(w));
  }
  return out;
}

void write_trace(std::ostream &out, std::span<const Instruction> instrs) {
  out.write(kTraceMagic.data(), kTraceMagic.size());
  out.put(static_cast<char>(kTraceVersion));
  const auto bytes = encode_words(instrs);
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::vector<Instruction> read_trace(std::istream &in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kTraceMagic)
    throw DecodeError("missing SISA trace magic");
  const int version = in.get();
  if (version != kTraceVersion)
    throw DecodeError("unsupported trace version " + std::to_string(version));
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  return decode_words(bytes);
}

std::string to_text(const Instruction &instr) {
  std::ostringstream os;
  os << mnemonic(instr.opcode) << ' ' << unsigned{instr.rd} << ' '
     << unsigned{instr.rs1} << ' ' << unsigned{instr.rs2};
  return os.str();
}

Instruction from_text(const std::string &line) {
  std::istringstream is(line);
  std::string op, rd, rs1, rs2, extra;
  if (!(is >> op >> rd >> rs1 >> rs2) || (is >> extra))
    throw std::invalid_argument("expected '<opcode> rd rs1 rs2': '" + line +
                                "'");
  Instruction i;
  if (auto named = opcode_from_mnemonic(op)) {
    i.opcode = *named;
  } else {
    const auto code = parse_field(op, 0x80, "opcode");
    if (!is_defined(code))
      throw std::invalid_argument("unknown set opcode '" + op + "'");
    i.opcode = static_cast<Opcode>(code);
  }
  i.rd = parse_field(rd, 32, "register");
  i.rs1 = parse_field(rs1, 32, "register");
  i.rs2 = parse_field(rs2, 32, "register");
  return i;
}

}  // namespace sisa::isa
