#pragma once

// Partitions (weakly decreasing nonnegative integer vectors) and the strip /
// interlacing predicates used by branching rules. Canonical form strips
// trailing zeros; part(i) reads 0 past the end so boundary conventions
// ("missing parts = 0") are uniform.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpz {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts) : parts_(parts) { canonicalize(); }
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) { canonicalize(); }

  static Partition empty() { return Partition(); }

  long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0-based
  std::size_t length() const { return parts_.size(); }
  long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
  const std::vector<long>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  bool contains(const Partition& mu) const {
    for (std::size_t i = 0; i < mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  // lambda/mu is a horizontal strip: mu subset of lambda and lambda_{i+1} <= mu_i.
  bool horizontal_strip_over(const Partition& mu) const {
    if (!contains(mu)) return false;
    for (std::size_t i = 0; i + 1 < length(); ++i)
      if (part(i + 1) > mu.part(i)) return false;
    return true;
  }

  // lambda/mu is a vertical strip: conjugate is a horizontal strip,
  // equivalently 0 <= lambda_i - mu_i <= 1 for all i.
  bool vertical_strip_over(const Partition& mu) const {
    for (std::size_t i = 0; i < std::max(length(), mu.length()); ++i) {
      long d = part(i) - mu.part(i);
      if (d < 0 || d > 1) return false;
    }
    return true;
  }

  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<long> c(static_cast<std::size_t>(parts_[0]), 0);
    for (long p : parts_)
      for (long j = 0; j < p; ++j) c[static_cast<std::size_t>(j)]++;
    return Partition(std::move(c));
  }

  Partition add_box(std::size_t row) const {  // 0-based row; may extend length by one
    std::vector<long> p = parts_;
    if (row > p.size()) throw std::invalid_argument("add_box: row gap");
    if (row == p.size()) p.push_back(0);
    p[row]++;
    Partition out(std::move(p));
    for (std::size_t i = 0; i + 1 < out.parts_.size(); ++i)
      if (out.parts_[i] < out.parts_[i + 1]) throw std::invalid_argument("add_box: not a partition");
    return out;
  }

  bool valid_after_increment(std::size_t row) const {
    return row == 0 || part(row) + 1 <= part(row - 1);
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

 private:
  void canonicalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("parts must be weakly decreasing");
    for (long p : parts_)
      if (p < 0) throw std::invalid_argument("parts must be nonnegative");
  }

  std::vector<long> parts_;
};

// mu interlaces below lambda (mu \prec lambda): lambda_1 >= mu_1 >= lambda_2 >= ...
inline bool interlaces(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) return false;
    if (i + 1 < lambda.length() && lambda.part(i + 1) > mu.part(i)) return false;
  }
  return true;
}

// All partitions with |lambda| == n and length <= max_len.
inline void partitions_of(long n, std::size_t max_len,
                          const std::function<void(const Partition&)>& visit) {
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rem, long cap) {
    if (rem == 0) {
      visit(Partition(std::vector<long>(cur)));
      return;
    }
    if (cur.size() >= max_len) return;
    for (long p = std::min(rem, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n > 0 ? n : 0);
}

// All partitions with |lambda| <= max_size, length <= max_len.
inline std::vector<Partition> partitions_up_to(long max_size, std::size_t max_len) {
  std::vector<Partition> out;
  for (long n = 0; n <= max_size; ++n)
    partitions_of(n, max_len, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// All partitions fitting in the box: length <= rows, parts <= max_part.
inline std::vector<Partition> partitions_in_box(std::size_t rows, long max_part) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(std::size_t, long)> rec2 = [&](std::size_t row, long cap) {
    if (row == rows) {
      out.emplace_back(std::vector<long>(cur));
      return;
    }
    for (long p = cap; p >= 0; --p) {
      cur.push_back(p);
      rec2(row + 1, p);
      cur.pop_back();
    }
  };
  rec2(0, max_part);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All mu with mu \prec lambda (lambda/mu a horizontal strip):
// mu_i in [lambda_{i+1}, lambda_i] for i = 1..l(lambda).
inline void interlacing_below(const Partition& lambda,
                              const std::function<void(const Partition&)>& visit) {
  const std::size_t m = lambda.length();
  if (m == 0) {
    visit(Partition());
    return;
  }
  std::vector<long> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      visit(Partition(std::vector<long>(cur)));
      return;
    }
    long lo = lambda.part(i + 1);
    long hi = lambda.part(i);
    for (long v = hi; v >= lo; --v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// All lambda with lambda \succ mu (horizontal strip over mu), lambda_1 <= cap1,
// length <= max_len.
inline void horizontal_strips_above(const Partition& mu, long cap1, std::size_t max_len,
                                    const std::function<void(const Partition&)>& visit) {
  std::size_t n = std::min(max_len, mu.length() + 1);
  std::vector<long> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      visit(Partition(std::vector<long>(cur)));
      return;
    }
    long lo = mu.part(i);
    long hi = i == 0 ? cap1 : std::min(cur[i - 1], i <= mu.length() ? mu.part(i - 1) : 0L);
    // lambda_i ranges over [mu_i, min(lambda_{i-1}, mu_{i-1})]
    if (i > 0) hi = std::min(cur[i - 1], mu.part(i - 1));
    for (long v = hi; v >= lo; --v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace kpz
