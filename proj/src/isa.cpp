#include "omegalab/isa.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "omegalab/errors.hpp"

namespace omegalab {

namespace {

constexpr std::string_view kIsaDescription =
    "omegalab-isa v1\n"
    "program := gamma(n) code[n]; gamma(n) := floor(log2 n) zeros, then n in binary\n"
    "opcode := 3 bits, most significant first\n"
    "000 PUSH gamma(k+1) ; push k\n"
    "001 INC ; top := top + 1\n"
    "010 DEC ; top := max(top - 1, 0)\n"
    "011 DUP ; push copy of top\n"
    "100 ROLL ; pop n, move item n below top to top\n"
    "101 JNZ d gamma(m) ; pop x, if x != 0 then ip := ip + m (d=0) or ip - m (d=1)\n"
    "110 OUTHALT ; pop x, output x, halt\n"
    "111 EVAL ; pop b, pop v >= 2, run bits(v) without leading 1 for <= b steps, push output, push 1 on halt else push 0, push 0\n"
    "TOTAL := FULL without backward JNZ and without EVAL\n";

}  // namespace

std::string_view opcode_name(Opcode op) {
  static constexpr std::array<std::string_view, 8> names = {
      "PUSH", "INC", "DEC", "DUP", "ROLL", "JNZ", "OUTHALT", "EVAL"};
  return names[static_cast<std::size_t>(op)];
}

std::string_view variant_name(MachineVariant v) {
  return v == MachineVariant::Full ? "FULL" : "TOTAL";
}

MachineVariant parse_variant(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "full") return MachineVariant::Full;
  if (lower == "total") return MachineVariant::Total;
  throw UsageError("unknown machine variant '" + std::string(text) + "' (expected full or total)");
}

std::string_view isa_description() { return kIsaDescription; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t isa_checksum() { return fnv1a64(kIsaDescription); }

std::string to_hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string isa_checksum_hex() { return to_hex64(isa_checksum()); }

}  // namespace omegalab
