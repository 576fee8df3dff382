#include "omegalab/berry.hpp"

#include <set>

#include "omegalab/assembler.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/gamma.hpp"

namespace omegalab {

namespace {

void check_query(const BerryQuery& q) {
  if (q.L < 1 || q.B < 1) throw UsageError("berry: L and B must be >= 1");
}

// Unpadded template. Stack comments list the stack bottom to top.
Assembler template_body(const BerryQuery& q) {
  Assembler a;
  auto pow_loop = a.new_label(), pow_body = a.new_label(), pow_done = a.new_label();
  auto dbl_loop = a.new_label(), dbl_body = a.new_label();
  auto cand = a.new_label(), scan = a.new_label(), scan_body = a.new_label();
  auto got = a.new_label(), eq_loop = a.new_label(), eq_b_nz = a.new_label();
  auto eq_both = a.new_label(), next_v = a.new_label();

  // The literals go in as k-1 then INC so their operands are gamma(L), gamma(B).
  a.push(Natural(q.L - 1));
  a.inc();                 // [c]          c = L
  a.push(Natural(1));      // [c a]        a = 1
  a.bind(pow_loop);        // [c a]
  a.swap();                // [a c]
  a.dup();
  a.jnz(pow_body);
  a.drop();                // [a]          a = 2^L
  a.jump(pow_done);
  a.bind(pow_body);        // [a c]
  a.dec();
  a.swap();                // [c a]
  a.push(Natural(0));      // [c a r]
  a.bind(dbl_loop);
  a.swap();                // [c r a]
  a.dup();
  a.jnz(dbl_body);
  a.drop();                // [c r]        r = 2a
  a.jump(pow_loop);
  a.bind(dbl_body);        // [c r a]
  a.dec();
  a.swap();
  a.inc();
  a.inc();                 // [c a-1 r+2]
  a.jump(dbl_loop);

  a.bind(pow_done);        // [N]
  a.push(Natural(q.B - 1));
  a.inc();                 // [N B]
  a.push(Natural(0));      // [N B x]
  a.bind(cand);
  a.pick(2);
  a.dec();                 // [N B x v]    v = N-1, the last string shorter than L
  a.bind(scan);            // strings are v-1 in length-lex index, v >= 2
  a.dup();
  a.dec();
  a.jnz(scan_body);
  a.drop();                // [N B x]      nothing named x
  a.outhalt();
  a.bind(scan_body);       // [N B x v]
  a.dup();
  a.pick(3);               // [N B x v v B]
  a.eval();                // [N B x v out flag]
  a.jnz(got);
  a.drop();
  a.jump(next_v);
  a.bind(got);             // [N B x v out]
  a.pick(2);               // [N B x v out x]
  a.bind(eq_loop);         // [.. p q]     equal iff both reach 0 together
  a.dup();
  a.jnz(eq_b_nz);
  a.drop();                // [.. p]
  a.jnz(next_v);           // p != 0: differ
  a.drop();                // [N B x]      x is named, try x+1
  a.inc();
  a.jump(cand);
  a.bind(eq_b_nz);         // [.. p q]     q != 0
  a.swap();
  a.dup();
  a.jnz(eq_both);
  a.drop();
  a.drop();                // [N B x v]
  a.jump(next_v);
  a.bind(eq_both);         // [.. q p]
  a.dec();
  a.swap();
  a.dec();
  a.jump(eq_loop);
  a.bind(next_v);          // [N B x v]
  a.dec();
  a.jump(scan);
  return a;
}

struct Layout {
  std::size_t fixed_code = 0;  // code bits except the two literal operands
  std::size_t padded_code = 0; // fixed_code plus padding
  std::size_t header = 0;
};

// The padded fixed part is 2^k - 2 bits, so for any literals with
// |gamma(L)| + |gamma(B)| <= 2^k + 1 the code length stays in [2^k, 2^(k+1))
// and the header length never changes.
const Layout& layout() {
  static const Layout l = [] {
    Layout out;
    out.fixed_code = encode_code(template_body(BerryQuery{1, 1}).finish()).size() - 2;
    std::size_t k = 1;
    while ((std::size_t{1} << k) - 2 < out.fixed_code + 6) ++k;
    out.padded_code = (std::size_t{1} << k) - 2;
    out.header = 2 * k + 1;
    return out;
  }();
  return l;
}

}  // namespace

Natural berry_number(const BerryQuery& q, unsigned workers, std::uint64_t enumeration_limit) {
  check_query(q);
  if (q.L > 62) throw ResourceRefusal("berry: L beyond 62 cannot be enumerated");
  if (q.L == 1) return Natural(0);
  ScanOptions opt;
  opt.budget = q.B;
  opt.workers = workers;
  opt.enumeration_limit = enumeration_limit;
  std::set<Natural> named;
  for (const auto& e : scan_programs(q.L - 1, opt)) {
    if (e.outcome.halted()) named.insert(*e.outcome.output);
  }
  Natural x(0);
  for (const auto& v : named) {
    if (v != x) break;
    x.increment();
  }
  return x;
}

Program emit_berry_program(const BerryQuery& q) {
  check_query(q);
  Assembler a = template_body(q);
  // Unreachable filler after the final jump: DUP is 3 bits, PUSH 0 is 4.
  std::size_t pad = layout().padded_code - layout().fixed_code;
  while (pad % 3 != 0) {
    a.push(Natural(0));
    pad -= 4;
  }
  for (; pad > 0; pad -= 3) a.dup();
  return a.assemble();
}

std::size_t berry_template_c0() { return layout().padded_code + layout().header; }

std::size_t berry_size_bound(const BerryQuery& q) {
  return berry_template_c0() + gamma_length(Natural(q.L)) + gamma_length(Natural(q.B));
}

bool BerryReport::consistent() const {
  return run.halted() && *run.output == value && generated.size() <= size_bound;
}

BerryReport berry_report(const BerryQuery& q, std::uint64_t meta_budget, unsigned workers,
                         std::uint64_t enumeration_limit) {
  if (meta_budget < 1) throw UsageError("berry: meta budget must be >= 1");
  BerryReport r;
  r.query = q;
  r.value = berry_number(q, workers, enumeration_limit);
  r.generated = emit_berry_program(q);
  r.size_bound = berry_size_bound(q);
  r.run = run(r.generated, meta_budget);
  return r;
}

}  // namespace omegalab
