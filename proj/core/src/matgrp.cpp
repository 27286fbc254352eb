#include "szq/matgrp.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "szq/error.hpp"
#include "szq/numtheory.hpp"

namespace szq {

Mat4 Mat4::identity(FieldPtr field) {
  std::array<Raw, 16> e{};
  for (std::size_t i = 0; i < kDim; ++i) e[i * kDim + i] = 1;
  return Mat4(std::move(field), e);
}

Mat4 Mat4::zero(FieldPtr field) { return Mat4(std::move(field), {}); }

Mat4 Mat4::from_raw(FieldPtr field, const std::array<Raw, 16>& entries) {
  for (Raw r : entries) {
    if (static_cast<std::uint64_t>(r) >= field->order()) {
      throw ParameterError("Mat4: entry " + poly_to_hex(r) + " lies outside the field");
    }
  }
  return Mat4(std::move(field), entries);
}

void Mat4::set(std::size_t row, std::size_t col, FieldElement value) {
  if (!field_->contains(value)) throw ParameterError("Mat4::set: element from another field");
  entries_[row * kDim + col] = value.bits();
}

bool Mat4::is_identity() const {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (entries_[i * kDim + j] != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  if (!a.field()->same_as(*b.field())) {
    throw ParameterError("mat_mul: factors over different fields");
  }
  const Field& f = *a.field();
  const auto& x = a.raw_entries();
  const auto& y = b.raw_entries();
  std::array<Mat4::Raw, 16> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Mat4::Raw acc = 0;
      for (std::size_t k = 0; k < 4; ++k) acc ^= f.mul_raw(x[i * 4 + k], y[k * 4 + j]);
      out[i * 4 + j] = acc;
    }
  }
  return Mat4::from_raw(a.field(), out);
}

Mat4 mat_inv(const Mat4& a) {
  const Field& f = *a.field();
  std::array<Mat4::Raw, 16> m = a.raw_entries();
  std::array<Mat4::Raw, 16> r = Mat4::identity(a.field()).raw_entries();
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && m[pivot * 4 + col] == 0) ++pivot;
    if (pivot == 4) throw SingularMatrixError("mat_inv: matrix is singular");
    if (pivot != col) {
      for (std::size_t k = 0; k < 4; ++k) {
        std::swap(m[pivot * 4 + k], m[col * 4 + k]);
        std::swap(r[pivot * 4 + k], r[col * 4 + k]);
      }
    }
    const Mat4::Raw scale = f.inv_raw(m[col * 4 + col]);
    for (std::size_t k = 0; k < 4; ++k) {
      m[col * 4 + k] = f.mul_raw(m[col * 4 + k], scale);
      r[col * 4 + k] = f.mul_raw(r[col * 4 + k], scale);
    }
    for (std::size_t row = 0; row < 4; ++row) {
      const Mat4::Raw factor = m[row * 4 + col];
      if (row == col || factor == 0) continue;
      for (std::size_t k = 0; k < 4; ++k) {
        m[row * 4 + k] ^= f.mul_raw(factor, m[col * 4 + k]);
        r[row * 4 + k] ^= f.mul_raw(factor, r[col * 4 + k]);
      }
    }
  }
  return Mat4::from_raw(a.field(), r);
}

Mat4 mat_pow(const Mat4& a, std::uint64_t k) {
  Mat4 result = Mat4::identity(a.field());
  Mat4 base = a;
  while (k) {
    if (k & 1) result = mat_mul(result, base);
    k >>= 1;
    if (k) base = mat_mul(base, base);
  }
  return result;
}

Mat4 conjugate(const Mat4& g, const Mat4& a, const Mat4& g_inv) {
  return mat_mul(mat_mul(g, a), g_inv);
}

std::string encode(const Mat4& a) {
  const std::size_t width = a.field()->element_bytes();
  std::string out;
  out.reserve(16 * width);
  for (Mat4::Raw e : a.raw_entries()) {
    for (std::size_t b = 0; b < width; ++b) out.push_back(static_cast<char>((e >> (8 * b)) & 0xff));
  }
  return out;
}

Mat4 decode(std::string_view bytes, FieldPtr field) {
  const std::size_t width = field->element_bytes();
  if (bytes.size() != 16 * width) {
    throw ParameterError("decode: expected " + std::to_string(16 * width) + " bytes, got " +
                         std::to_string(bytes.size()));
  }
  std::array<Mat4::Raw, 16> e{};
  for (std::size_t i = 0; i < 16; ++i) {
    Mat4::Raw v = 0;
    for (std::size_t b = 0; b < width; ++b) {
      v |= static_cast<Mat4::Raw>(static_cast<unsigned char>(bytes[i * width + b])) << (8 * b);
    }
    e[i] = v;
  }
  return Mat4::from_raw(std::move(field), e);
}

std::vector<std::uint64_t> hint_divisors(std::span<const std::uint64_t> hints) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t h : hints) {
    if (h == 0) continue;
    const auto d = divisors(h);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t element_order_from_candidates(const Mat4& a,
                                            std::span<const std::uint64_t> candidates) {
  for (std::uint64_t d : candidates) {
    if (mat_pow(a, d).is_identity()) return d;
  }
  throw OrderNotFoundError("element_order: no candidate order annihilates the element");
}

std::uint64_t element_order(const Mat4& a, std::span<const std::uint64_t> hints,
                            std::uint64_t bound) {
  if (!hints.empty()) return element_order_from_candidates(a, hint_divisors(hints));
  Mat4 x = a;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    x = mat_mul(x, a);
  }
  throw OrderNotFoundError("element_order: order exceeds bound " + std::to_string(bound));
}

std::uint64_t for_each_in_closure(std::span<const Mat4> gens, std::uint64_t limit,
                                  const std::function<void(const Mat4&)>& visit) {
  if (gens.empty()) throw ParameterError("closure: no generators");
  const Mat4 id = Mat4::identity(gens.front().field());
  std::unordered_set<std::string> seen{encode(id)};
  std::vector<Mat4> frontier{id};
  if (visit) visit(id);
  while (!frontier.empty()) {
    std::vector<Mat4> next;
    for (const Mat4& x : frontier) {
      for (const Mat4& g : gens) {
        Mat4 y = mat_mul(x, g);
        if (!seen.insert(encode(y)).second) continue;
        if (seen.size() > limit) {
          throw LimitExceededError("closure: more than " + std::to_string(limit) + " elements");
        }
        if (visit) visit(y);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace {

struct PackedKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool empty() const { return lo == 0 && hi == 0; }
  friend bool operator==(const PackedKey&, const PackedKey&) = default;
};

PackedKey pack(const Mat4& a, unsigned width) {
  PackedKey k;
  unsigned bit = 0;
  for (Mat4::Raw e : a.raw_entries()) {
    const auto v = static_cast<std::uint64_t>(e);
    if (bit < 64) {
      k.lo |= v << bit;
      if (bit + width > 64) k.hi |= v >> (64 - bit);
    } else {
      k.hi |= v << (bit - 64);
    }
    bit += width;
  }
  return k;
}

Mat4 unpack(const PackedKey& k, const FieldPtr& field) {
  const unsigned width = field->degree();
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::array<Mat4::Raw, 16> e{};
  unsigned bit = 0;
  for (auto& v : e) {
    std::uint64_t x;
    if (bit + width <= 64) {
      x = k.lo >> bit;
    } else if (bit >= 64) {
      x = k.hi >> (bit - 64);
    } else {
      x = (k.lo >> bit) | (k.hi << (64 - bit));
    }
    v = static_cast<Mat4::Raw>(x & mask);
    bit += width;
  }
  return Mat4::from_raw(field, e);
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Open addressing with linear probing. The all-zero key marks an empty slot;
// the zero matrix is never a group element.
class PackedSet {
 public:
  PackedSet() : slots_(std::size_t{1} << 16) {}

  bool insert(const PackedKey& k) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    if (!place(slots_, k)) return false;
    ++size_;
    return true;
  }
  std::uint64_t size() const { return size_; }

 private:
  static bool place(std::vector<PackedKey>& table, const PackedKey& k) {
    const std::size_t mask = table.size() - 1;
    std::size_t i = mix(k.lo ^ mix(k.hi)) & mask;
    while (!table[i].empty()) {
      if (table[i] == k) return false;
      i = (i + 1) & mask;
    }
    table[i] = k;
    return true;
  }
  void grow() {
    std::vector<PackedKey> bigger(slots_.size() * 2);
    for (const auto& k : slots_) {
      if (!k.empty()) place(bigger, k);
    }
    slots_ = std::move(bigger);
  }

  std::vector<PackedKey> slots_;
  std::uint64_t size_ = 0;
};

}  // namespace

std::uint64_t closure_size_packed(std::span<const Mat4> gens, std::uint64_t limit,
                                  const std::function<void(const Mat4&)>& visit) {
  if (gens.empty()) throw ParameterError("closure: no generators");
  const FieldPtr& field = gens.front().field();
  const unsigned width = field->degree();
  if (16 * width > 128) {
    throw ParameterError("closure_size_packed: field degree " + std::to_string(width) +
                         " does not fit a 128-bit key");
  }
  const Mat4 id = Mat4::identity(field);
  PackedSet seen;
  seen.insert(pack(id, width));
  if (visit) visit(id);
  std::vector<PackedKey> frontier{pack(id, width)};
  while (!frontier.empty()) {
    std::vector<PackedKey> next;
    for (const PackedKey& xk : frontier) {
      const Mat4 x = unpack(xk, field);
      for (const Mat4& g : gens) {
        const Mat4 y = mat_mul(x, g);
        const PackedKey yk = pack(y, width);
        if (!seen.insert(yk)) continue;
        if (seen.size() > limit) {
          throw LimitExceededError("closure: more than " + std::to_string(limit) + " elements");
        }
        if (visit) visit(y);
        next.push_back(yk);
      }
    }
    frontier = std::move(next);
    frontier.shrink_to_fit();
  }
  return seen.size();
}

}  // namespace szq
