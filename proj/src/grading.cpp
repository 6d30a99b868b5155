#include "floerbox/grading.hpp"

#include <sstream>

namespace floerbox {

int64_t checked_add(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

int64_t checked_sub(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_sub_overflow(x, y, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

int64_t checked_mul(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

GroupElement group_element(int64_t a, int64_t b, int64_t c, int64_t d) {
  return GroupElement{checked_mul(a, 2), checked_mul(b, 2), checked_mul(c, 2),
                      d};
}

GroupElement group_element_halves(int64_t a2, int64_t b2, int64_t c2,
                                  int64_t d) {
  if (((b2 ^ c2) & 1) != 0)
    throw Error(ErrorCode::Parity, "b + c must be an integer");
  return GroupElement{a2, b2, c2, d};
}

GroupElement group_identity() { return GroupElement{0, 0, 0, 0}; }

GroupElement group_lambda() { return GroupElement{2, 0, 0, 0}; }

GroupElement group_mul(const GroupElement& x, const GroupElement& y) {
  // det term b1*c2 - c1*b2 in doubled coordinates is (b2*c2' - c2*b2')/4;
  // doubled target needs (b2*c2' - c2*b2')/2, which is exact because each
  // factor has b and c of equal parity.
  int64_t det4 = checked_sub(checked_mul(x.b2, y.c2), checked_mul(x.c2, y.b2));
  if (det4 % 2 != 0)
    throw Error(ErrorCode::Parity, "group law produced a quarter-integer");
  GroupElement r;
  r.a2 = checked_add(checked_add(x.a2, y.a2), det4 / 2);
  r.b2 = checked_add(x.b2, y.b2);
  r.c2 = checked_add(x.c2, y.c2);
  r.d = checked_add(x.d, y.d);
  return r;
}

GroupElement group_inverse(const GroupElement& x) {
  // (a;b,c;d)^-1 = (-a;-b,-c;-d): the det term of an element with its own
  // negation vanishes.
  return GroupElement{checked_sub(0, x.a2), checked_sub(0, x.b2),
                      checked_sub(0, x.c2), checked_sub(0, x.d)};
}

GroupElement group_pow(const GroupElement& x, int64_t k) {
  return GroupElement{checked_mul(x.a2, k), checked_mul(x.b2, k),
                      checked_mul(x.c2, k), checked_mul(x.d, k)};
}

namespace {

std::string half_to_string(int64_t v2) {
  if (v2 % 2 == 0) return std::to_string(v2 / 2);
  return std::to_string(v2) + "/2";
}

}  // namespace

std::string to_string(const GroupElement& x) {
  std::ostringstream os;
  os << "(" << half_to_string(x.a2) << "; " << half_to_string(x.b2) << ", "
     << half_to_string(x.c2) << "; " << x.d << ")";
  return os.str();
}

DoubleCosetContext make_coset_context(const GroupElement& h_a,
                                      const GroupElement& h_d) {
  if (h_d.b2 != -2)
    throw Error(ErrorCode::Domain,
                "coset context requires h_d with b-slot -1");
  if (h_a.b2 != 0 || (h_a.c2 != 2 && h_a.c2 != -2))
    throw Error(ErrorCode::Domain,
                "coset context requires h_a with b-slot 0 and c-slot +-1");
  return DoubleCosetContext{h_a, h_d};
}

NormalizedGrading normalize_double_coset(const GroupElement& g,
                                         const DoubleCosetContext& ctx) {
  // Right h_d power clearing b: b2 + q * h_d.b2 = 0 with h_d.b2 = -2.
  if (g.b2 % 2 != 0)
    throw Error(ErrorCode::Parity,
                "cannot normalize: b-slot is a strict half-integer");
  int64_t q = g.b2 / 2;
  GroupElement r = group_mul(g, group_pow(ctx.h_d, q));
  // Left h_a power clearing c: p * h_a.c2 + c2 = 0 with h_a.c2 = +-2.
  if (r.c2 % 2 != 0)
    throw Error(ErrorCode::Parity,
                "cannot normalize: c-slot is a strict half-integer");
  int64_t p = checked_sub(0, r.c2) / ctx.h_a.c2;
  r = group_mul(group_pow(ctx.h_a, p), r);
  if (r.b2 != 0 || r.c2 != 0)
    throw Error(ErrorCode::Structure,
                "double-coset reduction failed to clear spin-c slots");
  if (r.a2 % 2 != 0)
    throw Error(ErrorCode::Parity,
                "normalized Maslov grading is not an integer");
  return NormalizedGrading{r.a2 / 2, r.d};
}

}  // namespace floerbox
