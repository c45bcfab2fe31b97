#include "xorgames/game.hpp"

#include <cassert>
#include <istream>

#include "xorgames/errors.hpp"

namespace xorgames {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
}

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

std::uint64_t sample_word(const SampleDescriptor& desc, std::uint64_t w) {
  const std::uint64_t key = desc.master_seed ^ mix64(desc.index + kGolden);
  return mix64(key + w * kGolden);
}

SymmetricGame sample_game(int n, const SampleDescriptor& desc) {
  assert(n >= 1);
  SymmetricGame g;
  g.n = n;
  g.bits.resize(static_cast<std::size_t>(n) + 1);
  std::uint64_t word = 0;
  for (int j = 0; j <= n; ++j) {
    if (j % 64 == 0) {
      word = sample_word(desc, static_cast<std::uint64_t>(j / 64) + 1);
    }
    g.bits[j] = static_cast<std::uint8_t>((word >> (j % 64)) & 1u);
  }
  return g;
}

std::string format_game(const SymmetricGame& g) {
  std::string out = std::to_string(g.n);
  out += ':';
  for (std::uint8_t b : g.bits) {
    out += b ? '1' : '0';
  }
  return out;
}

SymmetricGame parse_game(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0) {
    throw MalformedGame("expected \"n:bits\", got \"" + text + "\"");
  }
  int n = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw MalformedGame("non-digit in player count: \"" + text + "\"");
    }
    if (n > 1'000'000) {
      throw MalformedGame("player count out of range: \"" + text + "\"");
    }
    n = n * 10 + (c - '0');
  }
  if (n < 1) {
    throw MalformedGame("player count must be at least 1: \"" + text + "\"");
  }
  const std::size_t nbits = text.size() - colon - 1;
  if (nbits != static_cast<std::size_t>(n) + 1) {
    throw MalformedGame("expected " + std::to_string(n + 1) + " bits, got " +
                        std::to_string(nbits) + ": \"" + text + "\"");
  }
  SymmetricGame g;
  g.n = n;
  g.bits.resize(nbits);
  for (std::size_t j = 0; j < nbits; ++j) {
    const char c = text[colon + 1 + j];
    if (c != '0' && c != '1') {
      throw MalformedGame("non-bit character '" + std::string(1, c) + "' in \"" +
                          text + "\"");
    }
    g.bits[j] = static_cast<std::uint8_t>(c - '0');
  }
  return g;
}

std::vector<SymmetricGame> read_game_file(std::istream& in) {
  std::vector<SymmetricGame> games;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') {
      continue;
    }
    const std::size_t end = line.find_last_not_of(" \t\r");
    games.push_back(parse_game(line.substr(start, end - start + 1)));
  }
  return games;
}

}  // namespace xorgames
