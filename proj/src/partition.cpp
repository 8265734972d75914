#include "planch/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace planch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw usage_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw usage_error("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& s) {
  if (s.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw usage_error("malformed partition '" + s + "'");
    long v = std::stol(tok);
    if (v <= 0 || v > 1'000'000)
      throw usage_error("partition part out of range in '" + s + "'");
    parts.push_back(static_cast<int>(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::transpose() const {
  if (empty()) return Partition();
  std::vector<int> t(parts_[0], 0);
  for (int col = 0; col < parts_[0]; ++col)
    for (int row = 0; row < length(); ++row)
      if (parts_[row] > col) ++t[col];
  return Partition(std::move(t));
}

std::vector<int> Partition::contents() const {
  std::vector<int> c;
  c.reserve(size_);
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) c.push_back(j - i);
  std::sort(c.begin(), c.end());
  return c;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::vector<Partition> Partition::addable() const {
  std::vector<Partition> out;
  for (int i = 1; i <= length() + 1; ++i) {
    if (i > 1 && part(i) == part(i - 1)) continue;  // would break monotonicity
    std::vector<int> p = parts_;
    if (i <= length())
      ++p[i - 1];
    else
      p.push_back(1);
    out.push_back(Partition(std::move(p)));
  }
  return out;
}

std::vector<Partition> Partition::removable() const {
  std::vector<Partition> out;
  for (int i = 1; i <= length(); ++i) {
    if (part(i) == part(i + 1)) continue;
    std::vector<int> p = parts_;
    if (--p[i - 1] == 0) p.pop_back();
    out.push_back(Partition(std::move(p)));
  }
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (int i = 0; i < length(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

bool Partition::operator<(const Partition& o) const {
  if (size_ != o.size_) return size_ < o.size_;
  // Within a size: lexicographically larger part sequence comes first.
  return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                      parts_.begin(), parts_.end());
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    acc.push_back(first);
    gen_partitions(n - first, first, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::domain_error("dominance compares equal sizes only");
  long sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

namespace {

Int dim_hook(const Partition& la) {
  const Partition tr = la.transpose();
  Int hooks = 1;
  for (int i = 1; i <= la.length(); ++i)
    for (int j = 1; j <= la.part(i); ++j)
      hooks *= Int(la.part(i) - j + tr.part(j) - i + 1);
  Int num = factorial(la.size());
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  if (r != 0) throw std::logic_error("hook product does not divide n!");
  return q;
}

std::map<Partition, Int> g_path_memo;
std::mutex g_path_mutex;

// Caller holds g_path_mutex.
const Int& dim_paths_locked(const Partition& la) {
  auto it = g_path_memo.find(la);
  if (it != g_path_memo.end()) return it->second;
  Int total = 0;
  if (la.empty())
    total = 1;
  else
    for (const Partition& mu : la.removable()) total += dim_paths_locked(mu);
  return g_path_memo.emplace(la, std::move(total)).first->second;
}

}  // namespace

Int dim_standard(const Partition& la) {
  Int via_hooks = dim_hook(la);
  Int via_paths;
  {
    std::lock_guard<std::mutex> lock(g_path_mutex);
    via_paths = dim_paths_locked(la);
  }
  if (via_hooks != via_paths)
    throw std::logic_error("dim mismatch between hook formula and growth recursion for (" +
                           la.str() + ")");
  return via_hooks;
}

Int dim_skew(const Partition& mu, const Partition& la) {
  if (!la.contains(mu)) return 0;
  // f(nu) counts monotone paths mu -> nu for mu <= nu <= la.
  std::map<Partition, Int> memo;
  auto count = [&](auto&& self, const Partition& nu) -> const Int& {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    Int total = 0;
    if (nu == mu)
      total = 1;
    else
      for (const Partition& rho : nu.removable())
        if (rho.contains(mu)) total += self(self, rho);
    return memo.emplace(nu, std::move(total)).first->second;
  };
  return count(count, la);
}

Frobenius frobenius(const Partition& la) {
  Frobenius f;
  const Partition tr = la.transpose();
  const Rat half(1, 2);
  for (int i = 1; i <= la.length() && la.part(i) >= i; ++i) {
    f.a.push_back(Rat(la.part(i) - i) + half);
    f.b.push_back(Rat(tr.part(i) - i) + half);
  }
  return f;
}

}  // namespace planch
