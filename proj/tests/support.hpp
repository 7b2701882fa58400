#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>

#include "permutiple/error.hpp"
#include "permutiple/permutation.hpp"

struct CliResult {
  int exit_code = -1;
  std::string output;
};

inline std::string cli_path() {
  if (const char* env = std::getenv("PERMUTIPLE_CLI")) return env;
  // standard build layout: <build>/tests/<this binary>, <build>/tools/permutiple
  std::error_code ec;
  const auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto guess = self.parent_path().parent_path() / "tools" / "permutiple";
    if (std::filesystem::exists(guess)) return guess.string();
  }
  throw std::runtime_error("PERMUTIPLE_CLI is not set and no CLI binary was found");
}

inline CliResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult result;
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

template <typename F>
permutiple::Errc thrown_code(F&& f) {
  try {
    f();
  } catch (const permutiple::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a permutiple::Error");
}

inline permutiple::Permutation random_permutation(std::mt19937_64& rng, int k) {
  std::vector<int> images(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) images[static_cast<size_t>(j)] = j;
  std::shuffle(images.begin(), images.end(), rng);
  return permutiple::Permutation::from_images(std::move(images));
}

// Sorted cycle lengths; equal for conjugate permutations.
inline std::vector<int> cycle_type(const permutiple::Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> visited(static_cast<size_t>(p.size()), false);
  for (int start = 0; start < p.size(); ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    int len = 0;
    for (int j = start; !visited[static_cast<size_t>(j)]; j = p(j)) {
      visited[static_cast<size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}
