#include "permutiple/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace permutiple {

Permutation Permutation::identity(int k) {
  if (k < 0) throw Error(Errc::OutOfRange, "identity: k must be non-negative");
  std::vector<int> images(static_cast<size_t>(k) + 1);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images), trusted{});
}

Permutation Permutation::cycle_shift(int k) {
  if (k < 0) throw Error(Errc::OutOfRange, "cycle_shift: k must be non-negative");
  std::vector<int> images(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) images[static_cast<size_t>(j)] = (j + 1) % (k + 1);
  return Permutation(std::move(images), trusted{});
}

Permutation Permutation::reversal(int k) {
  if (k < 0) throw Error(Errc::OutOfRange, "reversal: k must be non-negative");
  std::vector<int> images(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) images[static_cast<size_t>(j)] = k - j;
  return Permutation(std::move(images), trusted{});
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw Error(Errc::OutOfRange, "from_images: empty image table");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw Error(Errc::OutOfRange, "from_images: image " + std::to_string(v) + " out of range");
    if (seen[static_cast<size_t>(v)])
      throw Error(Errc::RepeatedElement, "from_images: image " + std::to_string(v) + " repeated");
    seen[static_cast<size_t>(v)] = true;
  }
  return Permutation(std::move(images), trusted{});
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "compose: length mismatch");
  std::vector<int> images(static_cast<size_t>(a.size()));
  for (int j = 0; j < a.size(); ++j) images[static_cast<size_t>(j)] = a(b(j));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<size_t>(p.size()));
  for (int j = 0; j < p.size(); ++j) images[static_cast<size_t>(p(j))] = j;
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& t) {
  return compose(compose(p, t), inverse(p));
}

Permutation power(const Permutation& p, long long e) {
  Permutation base = e < 0 ? inverse(p) : p;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Permutation acc = Permutation::identity(p.max_index());
  while (n > 0) {
    if (n & 1) acc = compose(acc, base);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

Permutation parse_cycles(std::string_view text, int k) {
  if (k < 0) throw Error(Errc::OutOfRange, "parse_cycles: k must be non-negative");

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_ws();
  if (pos == text.size()) throw Error(Errc::MalformedCycles, "empty cycle notation");

  std::vector<int> images(static_cast<size_t>(k) + 1);
  std::iota(images.begin(), images.end(), 0);

  if (text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw Error(Errc::MalformedCycles, "trailing characters after 'e'");
    return Permutation::from_images(std::move(images));
  }

  std::vector<bool> used(static_cast<size_t>(k) + 1, false);
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(Errc::MalformedCycles, "expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start) throw Error(Errc::MalformedCycles, "expected a cycle element");
      if (pos - start > 9) throw Error(Errc::OutOfRange, "cycle element too large");
      int elem = std::stoi(std::string(text.substr(start, pos - start)));
      if (elem > k)
        throw Error(Errc::OutOfRange, "cycle element " + std::to_string(elem) + " exceeds " + std::to_string(k));
      if (used[static_cast<size_t>(elem)])
        throw Error(Errc::RepeatedElement, "element " + std::to_string(elem) + " repeated");
      used[static_cast<size_t>(elem)] = true;
      cycle.push_back(elem);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw Error(Errc::MalformedCycles, "expected ',' or ')'");
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> visited(static_cast<size_t>(p.size()), false);
  for (int start = 0; start < p.size(); ++start) {
    if (visited[static_cast<size_t>(start)] || p(start) == start) continue;
    out += '(';
    int j = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j);
      visited[static_cast<size_t>(j)] = true;
      j = p(j);
      first = false;
    } while (j != start);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::string format_image_table(const Permutation& p) {
  std::string top, bottom;
  for (int j = 0; j < p.size(); ++j) {
    std::string a = std::to_string(j);
    std::string b = std::to_string(p(j));
    size_t w = std::max(a.size(), b.size());
    if (j > 0) {
      top += ' ';
      bottom += ' ';
    }
    top += std::string(w - a.size(), ' ') + a;
    bottom += std::string(w - b.size(), ' ') + b;
  }
  return top + '\n' + bottom;
}

bool is_full_cycle(const Permutation& p) {
  int j = 0;
  for (int steps = 1; steps < p.size(); ++steps) {
    j = p(j);
    if (j == 0) return false;
  }
  return p(j) == 0;
}

std::vector<Permutation> solve_conjugation_to_shift(const Permutation& gamma) {
  if (!is_full_cycle(gamma)) return {};
  std::vector<Permutation> solutions;
  solutions.reserve(static_cast<size_t>(gamma.size()));
  for (int a = 0; a < gamma.size(); ++a) {
    // pi(j+1) = gamma(pi(j)) with pi(0) = a
    std::vector<int> images(static_cast<size_t>(gamma.size()));
    images[0] = a;
    for (int j = 1; j < gamma.size(); ++j)
      images[static_cast<size_t>(j)] = gamma(images[static_cast<size_t>(j - 1)]);
    solutions.push_back(Permutation::from_images(std::move(images)));
  }
  return solutions;
}

}  // namespace permutiple
