#include "braidsc/simple_braid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidsc {

namespace {

void check_strands(int n) {
  if (n < 1 || n > kMaxStrands) {
    throw std::invalid_argument("strand count " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxStrands));
  }
}

using Images = std::array<std::uint8_t, kMaxStrands>;

// Bit i set iff r[i] > r[i+1] (0-based i).
AtomSet descents(const Images& r, int n) {
  AtomSet mask = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (r[i] > r[i + 1]) mask |= AtomSet{1} << i;
  }
  return mask;
}

void refresh_descent(AtomSet& mask, const Images& r, int n, int i) {
  if (i < 0 || i + 1 >= n) return;
  const AtomSet bit = AtomSet{1} << i;
  if (r[i] > r[i + 1]) {
    mask |= bit;
  } else {
    mask &= ~bit;
  }
}

}  // namespace

SimpleBraid SimpleBraid::identity(int n) {
  check_strands(n);
  SimpleBraid s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) s.img_[i] = static_cast<std::uint8_t>(i);
  return s;
}

SimpleBraid SimpleBraid::delta(int n) {
  check_strands(n);
  SimpleBraid s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) s.img_[i] = static_cast<std::uint8_t>(n - 1 - i);
  return s;
}

SimpleBraid SimpleBraid::atom(int n, int i) {
  check_strands(n);
  if (i < 1 || i >= n) throw std::invalid_argument("atom index out of range");
  SimpleBraid s = identity(n);
  std::swap(s.img_[i - 1], s.img_[i]);
  return s;
}

SimpleBraid SimpleBraid::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_strands(n);
  SimpleBraid s;
  s.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxStrands> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("images do not form a permutation of 1.." + std::to_string(n));
    }
    seen[v - 1] = true;
    s.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return s;
}

SimpleBraid SimpleBraid::from_word(int n, std::span<const int> generators) {
  SimpleBraid s = identity(n);
  // pos_to_strand tracks which strand sits at each position.
  Images pos_to_strand = s.img_;
  for (int g : generators) {
    if (g < 1 || g >= n) throw std::invalid_argument("generator index out of range");
    const int a = pos_to_strand[g - 1];
    const int b = pos_to_strand[g];
    if (a > b) throw std::invalid_argument("positive word is not a permutation braid");
    std::swap(pos_to_strand[g - 1], pos_to_strand[g]);
  }
  for (int p = 0; p < n; ++p) s.img_[pos_to_strand[p]] = static_cast<std::uint8_t>(p);
  return s;
}

std::vector<int> SimpleBraid::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
  return out;
}

bool SimpleBraid::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

bool SimpleBraid::is_delta() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != n_ - 1 - i) return false;
  }
  return true;
}

int SimpleBraid::length() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (img_[i] > img_[j]) ++count;
    }
  }
  return count;
}

AtomSet SimpleBraid::starting_set() const { return descents(img_, n_); }

AtomSet SimpleBraid::finishing_set() const { return descents(inverse_permutation().img_, n_); }

std::vector<int> SimpleBraid::word() const {
  std::vector<int> out;
  Images r = img_;
  AtomSet mask = descents(r, n_);
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    out.push_back(i + 1);
    std::swap(r[i], r[i + 1]);
    refresh_descent(mask, r, n_, i - 1);
    refresh_descent(mask, r, n_, i);
    refresh_descent(mask, r, n_, i + 1);
  }
  return out;
}

SimpleBraid SimpleBraid::inverse_permutation() const {
  SimpleBraid s;
  s.n_ = n_;
  for (int i = 0; i < n_; ++i) s.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return s;
}

std::string SimpleBraid::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i != 0) os << ' ';
    os << img_[i] + 1;
  }
  os << ']';
  return os.str();
}

std::size_t SimpleBraid::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + img_[i];
  return h;
}

SimpleBraid compose_unchecked(const SimpleBraid& a, const SimpleBraid& b) {
  SimpleBraid c;
  c.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) c.img_[i] = b.img_[a.img_[i]];
  return c;
}

SimpleBraid left_gcd(const SimpleBraid& a, const SimpleBraid& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("left_gcd: strand counts differ");
  const int n = a.n_;
  // Peel common starting atoms off both residuals, lowest index first.
  Images ra = a.img_;
  Images rb = b.img_;
  AtomSet da = descents(ra, n);
  AtomSet db = descents(rb, n);
  AtomSet common = da & db;
  while (common != 0) {
    const int i = std::countr_zero(common);
    std::swap(ra[i], ra[i + 1]);
    std::swap(rb[i], rb[i + 1]);
    for (int k = i - 1; k <= i + 1; ++k) {
      refresh_descent(da, ra, n, k);
      refresh_descent(db, rb, n, k);
    }
    common = da & db;
  }
  // a = g * ra, so pi_g = pi_ra^-1 o pi_a.
  Images ra_inv{};
  for (int i = 0; i < n; ++i) ra_inv[ra[i]] = static_cast<std::uint8_t>(i);
  SimpleBraid g;
  g.n_ = a.n_;
  for (int i = 0; i < n; ++i) g.img_[i] = ra_inv[a.img_[i]];
  return g;
}

SimpleBraid right_complement(const SimpleBraid& a) {
  SimpleBraid c;
  c.n_ = a.n_;
  const int n = a.n_;
  for (int i = 0; i < n; ++i) c.img_[a.img_[i]] = static_cast<std::uint8_t>(n - 1 - i);
  return c;
}

SimpleBraid left_complement(const SimpleBraid& a) {
  // c * a = Delta  =>  pi_a o pi_c = w0  =>  pi_c = pi_a^-1 o w0.
  SimpleBraid c;
  c.n_ = a.n_;
  const int n = a.n_;
  Images inv{};
  for (int i = 0; i < n; ++i) inv[a.img_[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < n; ++i) c.img_[i] = inv[n - 1 - i];
  return c;
}

SimpleBraid tau(const SimpleBraid& a) {
  SimpleBraid c;
  c.n_ = a.n_;
  const int n = a.n_;
  for (int i = 0; i < n; ++i) {
    c.img_[i] = static_cast<std::uint8_t>(n - 1 - a.img_[n - 1 - i]);
  }
  return c;
}

bool is_left_weighted(const SimpleBraid& a, const SimpleBraid& b) {
  return (b.starting_set() & ~a.finishing_set()) == 0;
}

bool is_prefix(const SimpleBraid& a, const SimpleBraid& b) {
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a[i] > a[j] && b[i] < b[j]) return false;
    }
  }
  return true;
}

SimpleBraid prefix_quotient(const SimpleBraid& a, const SimpleBraid& b) {
  // b = a * c  =>  pi_c = pi_b o pi_a^-1.
  SimpleBraid c;
  c.n_ = a.n_;
  const int n = a.n_;
  for (int i = 0; i < n; ++i) c.img_[a.img_[i]] = b.img_[i];
  return c;
}

std::vector<SimpleBraid> all_simple_braids(int n) {
  check_strands(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SimpleBraid> out;
  do {
    out.push_back(SimpleBraid::from_images(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace braidsc
