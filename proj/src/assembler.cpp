#include "omegalab/assembler.hpp"

#include <stdexcept>

namespace omegalab {

Assembler::Label Assembler::new_label() {
  labels_.emplace_back();
  return Label{labels_.size() - 1};
}

void Assembler::bind(Label label) {
  if (labels_.at(label.id)) throw std::logic_error("label bound twice");
  labels_[label.id] = code_.size();
}

void Assembler::push(Natural k) { code_.push_back(Instruction::push(std::move(k))); }
void Assembler::inc() { code_.push_back(Instruction::simple(Opcode::Inc)); }
void Assembler::dec() { code_.push_back(Instruction::simple(Opcode::Dec)); }
void Assembler::dup() { code_.push_back(Instruction::simple(Opcode::Dup)); }
void Assembler::roll() { code_.push_back(Instruction::simple(Opcode::Roll)); }
void Assembler::outhalt() { code_.push_back(Instruction::simple(Opcode::OutHalt)); }
void Assembler::eval() { code_.push_back(Instruction::simple(Opcode::Eval)); }

void Assembler::jnz(Label target) {
  fixups_.push_back({code_.size(), target.id});
  code_.push_back(Instruction::jnz_forward(1));
}

void Assembler::jump(Label target) {
  push(Natural(1));
  jnz(target);
}

void Assembler::drop() { code_.push_back(Instruction::jnz_forward(1)); }

void Assembler::swap() { roll_from(1); }

void Assembler::roll_from(std::size_t depth) {
  push(Natural(depth));
  roll();
}

void Assembler::pick(std::size_t depth) {
  if (depth == 0) {
    dup();
    return;
  }
  // [e s_{d-1} .. s_0] -> [s.. e] -> [s.. e e] -> [e e s..] -> [e s.. e]
  roll_from(depth);
  dup();
  for (std::size_t i = 0; i < depth; ++i) roll_from(depth + 1);
  roll_from(depth);
}

std::vector<Instruction> Assembler::finish() const {
  std::vector<Instruction> out = code_;
  for (const auto& fix : fixups_) {
    const auto& target = labels_.at(fix.label);
    if (!target) throw std::logic_error("jump to an unbound label");
    if (*target == fix.at) throw std::logic_error("JNZ cannot target itself");
    if (*target > fix.at) {
      out[fix.at] = Instruction::jnz_forward(*target - fix.at);
    } else {
      out[fix.at] = Instruction::jnz_back(fix.at - *target);
    }
  }
  return out;
}

}  // namespace omegalab
