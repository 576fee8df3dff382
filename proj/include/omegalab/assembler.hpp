#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "omegalab/program.hpp"

namespace omegalab {

// Builds instruction lists with symbolic jump targets. Offsets are resolved
// relative to each JNZ's own index when finish() is called.
class Assembler {
public:
  struct Label {
    std::size_t id;
  };

  Label new_label();
  void bind(Label label);

  void push(Natural k);
  void inc();
  void dec();
  void dup();
  void roll();
  void outhalt();
  void eval();
  void jnz(Label target);

  // Macros over the base instruction set.
  void jump(Label target);        // PUSH 1; JNZ
  void drop();                    // JNZ +1 (pops whatever is on top)
  void swap();                    // PUSH 1; ROLL
  void roll_from(std::size_t depth);  // PUSH depth; ROLL
  // Copies the item `depth` below the top onto the top, leaving the rest in place.
  void pick(std::size_t depth);

  std::size_t size() const noexcept { return code_.size(); }
  std::vector<Instruction> finish() const;
  Program assemble() const { return make_program(finish()); }

private:
  struct Pending {
    std::size_t at;
    std::size_t label;
  };
  std::vector<Instruction> code_;
  std::vector<std::optional<std::size_t>> labels_;
  std::vector<Pending> fixups_;
};

}  // namespace omegalab
