#include "kschur/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "kschur/error.hpp"

namespace kschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(largest(), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++conj[j];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
  return h;
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
  int a = 0;
  int b = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  generate(n, std::max(max_part, 0), prefix, out);
  return out;
}

int hook_length(const Partition& lambda, int row, int col) {
  int leg = 0;
  for (int r = row + 1; r < lambda.length() && lambda[r] > col; ++r) ++leg;
  return lambda[row] - col + leg;
}

Partition parse_partition(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')' && ch != '[' &&
        ch != ']')
      cleaned += ch;
  std::vector<int> parts;
  if (!cleaned.empty()) {
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw DomainError("bad partition entry '" + item + "'");
        parts.push_back(v);
      } catch (const std::logic_error&) {
        throw DomainError("bad partition entry '" + item + "'");
      }
    }
  }
  return Partition(std::move(parts));
}

void require_bounded(const Partition& lambda, int k) {
  if (k < 1) throw DomainError("level k must be at least 1");
  if (lambda.largest() > k)
    throw DomainError("partition " + lambda.str() + " is not " + std::to_string(k) + "-bounded");
}

// ---------------------------------------------------------------------------

bool is_core(const Partition& lambda, int l) {
  if (l < 2) throw DomainError("core level l must be at least 2");
  const Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      if ((lambda[i] - j - 1) + (conj[j] - i - 1) + 1 == l) return false;
  return true;
}

Partition core_to_bounded(const Partition& core, int l) {
  if (!is_core(core, l)) throw DomainError(core.str() + " is not a " + std::to_string(l) + "-core");
  const Partition conj = core.conjugate();
  std::vector<int> rows(core.length(), 0);
  for (int i = 0; i < core.length(); ++i)
    for (int j = 0; j < core[i]; ++j)
      if ((core[i] - j - 1) + (conj[j] - i - 1) + 1 < l) ++rows[i];
  return Partition(std::move(rows));
}

Partition bounded_to_core(const Partition& mu, int k) {
  require_bounded(mu, k);
  const int len = mu.length();
  std::vector<int> core(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    const int floor_len = (i + 1 < len) ? core[i + 1] : 0;
    for (int shift = 0;; ++shift) {
      const int row_len = mu[i] + shift;
      if (row_len < floor_len) continue;
      int leg = 0;
      for (int r = i + 1; r < len && core[r] > shift; ++r) ++leg;
      if (mu[i] + leg <= k) {
        core[i] = row_len;
        break;
      }
    }
  }
  Partition result(std::move(core));
  if (!is_core(result, k + 1) || core_to_bounded(result, k + 1) != mu)
    throw InternalError("bounded_to_core failed to invert 𝔭 on " + mu.str());
  return result;
}

int Chain::sum() const { return std::accumulate(values.begin(), values.end(), 0); }

std::vector<int> Chain::nonzero_values() const {
  std::vector<int> out;
  for (int v : values)
    if (v != 0) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> ChainDecomp::part_chains() const {
  std::vector<std::vector<int>> out;
  for (const Chain& c : chains) {
    auto values = c.nonzero_values();
    if (!values.empty()) out.push_back(std::move(values));
  }
  if (static_cast<int>(out.size()) > k)
    throw InternalError("more than k nonzero chains");
  out.resize(k);
  return out;
}

ChainDecomp chain_decomposition(const Partition& lambda, int k) {
  require_bounded(lambda, k);
  ChainDecomp out;
  out.k = k;
  // A jump from a nonzero row i lands at most on row length + k - 1.
  out.padded_length = lambda.length() + k;
  std::vector<bool> visited(out.padded_length, false);
  for (int start = 0; start < out.padded_length; ++start) {
    if (visited[start]) continue;
    Chain chain;
    for (int row = start; row < out.padded_length; row += k - lambda[row] + 1) {
      visited[row] = true;
      chain.values.push_back(lambda[row]);
      chain.origin_rows.push_back(row);
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

Partition omega_by_chains(const Partition& lambda, int k) {
  const ChainDecomp decomp = chain_decomposition(lambda, k);
  std::vector<int> columns;
  for (const Chain& c : decomp.chains)
    if (int s = c.sum(); s > 0) columns.push_back(s);
  std::sort(columns.begin(), columns.end(), std::greater<>());
  return Partition(std::move(columns)).conjugate();
}

Partition omega_by_cores(const Partition& lambda, int k) {
  return core_to_bounded(bounded_to_core(lambda, k).conjugate(), k + 1);
}

Partition omega_conjugate(const Partition& lambda, int k) {
  Partition by_chains = omega_by_chains(lambda, k);
  Partition by_cores = omega_by_cores(lambda, k);
  if (by_chains != by_cores)
    throw InternalError("k-conjugation routes disagree on " + lambda.str() + ": chains give " +
                        by_chains.str() + ", cores give " + by_cores.str());
  return by_chains;
}

}  // namespace kschur
