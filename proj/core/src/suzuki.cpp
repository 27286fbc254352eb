#include "szq/suzuki.hpp"

#include <limits>
#include <string>

#include "szq/error.hpp"

namespace szq {

SuzukiParams make_params(unsigned m) {
  if (m == 0) {
    throw ParameterError("make_params: m must be at least 1 (q = 2 gives a non-simple group)");
  }
  if (m > kMaxSuzukiM) {
    throw ParameterError("make_params: m must be at most " + std::to_string(kMaxSuzukiM));
  }
  SuzukiParams p;
  p.m = m;
  p.q = std::uint64_t{1} << (2 * m + 1);
  p.s = std::uint64_t{1} << (m + 1);
  p.u1 = p.q + p.s + 1;
  p.u2 = p.q - p.s + 1;
  p.v = p.q - 1;
  const BigInt q = p.q;
  p.w_order = q * q;
  p.group_order = p.w_order * (q * q + 1) * p.v;

  if (BigInt(p.s) * p.s != 2 * q || BigInt(p.u1) * p.u2 != q * q + 1) {
    throw AssertionError("make_params: parameter identities failed");
  }
  return p;
}

std::optional<unsigned> m_from_q(std::uint64_t q) {
  for (unsigned m = 1; m <= kMaxSuzukiM; ++m) {
    if (q == (std::uint64_t{1} << (2 * m + 1))) return m;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> order_hints(const SuzukiParams& p) { return {4, p.v, p.u1, p.u2}; }

PartitionClassCounts closed_form_subgroup_counts(const SuzukiParams& p) {
  const BigInt q = p.q;
  PartitionClassCounts c;
  c.n_w = q * q + 1;
  c.n_u1 = p.group_order / (4 * BigInt(p.u1));
  c.n_u2 = p.group_order / (4 * BigInt(p.u2));
  c.n_v = p.group_order / (2 * BigInt(p.v));
  return c;
}

BigInt partition_coverage(const SuzukiParams& p, const PartitionClassCounts& c) {
  return c.n_w * (p.w_order - 1) + c.n_u1 * (p.u1 - 1) + c.n_u2 * (p.u2 - 1) +
         c.n_v * (p.v - 1);
}

Mat4 make_w(const FieldPtr& field, FieldElement a, FieldElement b) {
  if (!field->contains(a) || !field->contains(b)) {
    throw ParameterError("make_w: arguments from another field");
  }
  const Field& f = *field;
  const auto x = a.bits();
  const auto y = b.bits();
  const auto px = f.twist_raw(x);
  const auto py = f.twist_raw(y);
  const auto x_px = f.mul_raw(x, px);
  const auto r41 = f.mul_raw(f.mul_raw(x, x), px) ^ f.mul_raw(x, y) ^ py;
  const auto r42 = x_px ^ y;
  // clang-format off
  return Mat4::from_raw(field, {
      1,   0,   0, 0,
      x,   1,   0, 0,
      y,   px,  1, 0,
      r41, r42, x, 1,
  });
  // clang-format on
}

std::optional<std::pair<FieldElement, FieldElement>> as_w(const Mat4& x) {
  const FieldElement a = x.at(1, 0);
  const FieldElement b = x.at(2, 0);
  if (make_w(x.field(), a, b) == x) return std::make_pair(a, b);
  return std::nullopt;
}

Mat4 make_torus(const FieldPtr& field, FieldElement lambda) {
  if (!field->contains(lambda) || lambda.is_zero()) {
    throw ParameterError("make_torus: lambda must be a nonzero element of the field");
  }
  const std::uint64_t t = std::uint64_t{1} << field->m();
  const FieldElement li = inv(lambda);
  Mat4 d = Mat4::zero(field);
  d.set(0, 0, pow(lambda, 1 + t));
  d.set(1, 1, pow(lambda, t));
  d.set(2, 2, pow(li, t));
  d.set(3, 3, pow(li, 1 + t));
  return d;
}

Mat4 make_tau(const FieldPtr& field) {
  Mat4 t = Mat4::zero(field);
  for (std::size_t i = 0; i < 4; ++i) t.set(i, 3 - i, field->one());
  return t;
}

namespace {

void certify_structural(const std::vector<Mat4>& gens) {
  for (const Mat4& g : gens) {
    try {
      (void)mat_inv(g);
    } catch (const SingularMatrixError&) {
      throw CertificationError("standard_generators: a generator is singular");
    }
  }
  const Mat4& tau = gens[3];
  if (!mat_mul(tau, tau).is_identity()) {
    throw CertificationError("standard_generators: tau is not an involution");
  }
  const Mat4& d = gens[2];
  const Mat4 d_inv = mat_inv(d);
  for (std::size_t i = 0; i < 2; ++i) {
    if (!as_w(conjugate(d, gens[i], d_inv))) {
      throw CertificationError("standard_generators: torus does not normalize W");
    }
  }
}

void certify_closure(const SuzukiParams& p, const std::vector<Mat4>& gens) {
  if (p.group_order > std::numeric_limits<std::uint64_t>::max()) {
    throw CertificationError("standard_generators: group too large to certify by closure");
  }
  const auto expected = static_cast<std::uint64_t>(p.group_order);
  const auto candidates = hint_divisors(order_hints(p));
  std::uint64_t bad_orders = 0;
  std::uint64_t size = 0;
  try {
    size = closure_size_packed(gens, expected, [&](const Mat4& x) {
      try {
        (void)element_order_from_candidates(x, candidates);
      } catch (const OrderNotFoundError&) {
        ++bad_orders;
      }
    });
  } catch (const LimitExceededError&) {
    throw CertificationError("standard_generators: closure exceeds |Sz(q)| = " +
                             to_decimal(p.group_order));
  }
  if (size != expected) {
    throw CertificationError("standard_generators: closure has " + std::to_string(size) +
                             " elements, expected " + to_decimal(p.group_order));
  }
  if (bad_orders) {
    throw CertificationError("standard_generators: " + std::to_string(bad_orders) +
                             " closure elements have orders outside the spectrum");
  }
}

}  // namespace

std::vector<Mat4> standard_generators(const SuzukiParams& p, const FieldPtr& field,
                                      Certify level) {
  if (field->m() != p.m) {
    throw ParameterError("standard_generators: field degree does not match q");
  }
  std::vector<Mat4> gens{
      make_w(field, field->one(), field->zero()),
      make_w(field, field->zero(), field->one()),
      make_torus(field, field->primitive_element()),
      make_tau(field),
  };
  certify_structural(gens);
  if (level == Certify::kClosure) certify_closure(p, gens);
  return gens;
}

}  // namespace szq
