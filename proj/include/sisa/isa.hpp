#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sisa::isa {

/// Set-instruction opcodes, carried in bits [31..25] of the encoded word.
///
///   0x0  A∩B   SA∩SA  merge
///   0x1  A∩B   SA∩SA  galloping
///   0x2  A∩B   SA∩SA  merge or galloping, chosen by the controller
///   0x3  A∩B   SA∩DB  bit probes
///   0x4  A∩B   DB∩DB  bitwise AND (in-situ)
///   0x5  A∪{x} DB     set bit
///   0x6  A\{x} DB     clear bit
///   0x7  A∪B
///   0x8  A\B
///   0x9  |A∩B| fused, result not materialized
///   0xA  |A∪B| fused
///   0xB  |A\B| fused
///   0xC  x∈A
enum class Opcode : std::uint8_t {
  IntersectMerge = 0x0,
  IntersectGallop = 0x1,
  IntersectAuto = 0x2,
  IntersectSaDb = 0x3,
  IntersectDbDb = 0x4,
  DbAdd = 0x5,
  DbRemove = 0x6,
  Union = 0x7,
  Difference = 0x8,
  IntersectCard = 0x9,
  UnionCard = 0xA,
  DifferenceCard = 0xB,
  Membership = 0xC,
};

inline constexpr std::size_t kNumOpcodes = 13;
inline constexpr std::uint32_t kCustomOpcode = 0x16;

bool is_defined(std::uint8_t opcode);
const char *mnemonic(Opcode op);
std::optional<Opcode> opcode_from_mnemonic(const std::string &name);

struct Instruction {
  Opcode opcode = Opcode::IntersectMerge;
  std::uint8_t rs1 = 0;
  std::uint8_t rs2 = 0;
  std::uint8_t rd = 0;

  friend bool operator==(const Instruction &, const Instruction &) = default;
};

class DecodeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// opcode<<25 | rs2<<20 | rs1<<15 | 0<<12 | rd<<7 | 0x16.
/// Throws std::invalid_argument if opcode >= 0x80 or a register >= 32. Any
/// 7-bit opcode encodes; only defined opcodes decode.
std::uint32_t encode(const Instruction &instr);

/// Throws DecodeError if bits [6..0] are not 0x16 or the opcode is unknown.
Instruction decode(std::uint32_t word);

/// Raw little-endian word stream, no header.
std::vector<std::uint8_t> encode_words(std::span<const Instruction> instrs);
/// Throws DecodeError on a trailing partial word.
std::vector<Instruction> decode_words(std::span<const std::uint8_t> bytes);

inline constexpr std::array<char, 4> kTraceMagic = {'S', 'I', 'S', 'A'};
inline constexpr std::uint8_t kTraceVersion = 1;

/// Trace file: "SISA", version byte, then the raw word stream.
void write_trace(std::ostream &out, std::span<const Instruction> instrs);
std::vector<Instruction> read_trace(std::istream &in);

/// Text form used by the CLI: "<mnemonic> rd rs1 rs2", e.g. "isect.dbdb 3 1 2".
/// The mnemonic may also be a numeric opcode such as "0x4".
std::string to_text(const Instruction &instr);
Instruction from_text(const std::string &line);

}  // namespace sisa::isa
