#ifndef XORGAMES_GAME_HPP
#define XORGAMES_GAME_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xorgames {

/// Symmetric XOR game on n players: the players win iff the parity of
/// their answers equals bits[j] when exactly j input bits are 1.
struct SymmetricGame {
  int n = 0;
  std::vector<std::uint8_t> bits;  // G_0 .. G_n, values 0/1

  bool operator==(const SymmetricGame&) const = default;
};

/// (master_seed, index) fully determines a sampled game, independent of
/// platform and call order.
struct SampleDescriptor {
  std::uint64_t master_seed = 0;
  std::uint64_t index = 0;
};

/// SplitMix64 finalizer; the fixed constants make sampled games
/// reproducible across implementations.
std::uint64_t mix64(std::uint64_t z);

/// w-th 64-bit word (w >= 1) of the bit stream for one descriptor.
std::uint64_t sample_word(const SampleDescriptor& desc, std::uint64_t w);

/// Uniform random game; bit j is bit (j mod 64) of word j/64 + 1.
SymmetricGame sample_game(int n, const SampleDescriptor& desc);

/// Canonical "n:b_0b_1...b_n" form, e.g. CHSH is "2:001".
std::string format_game(const SymmetricGame& g);

/// Inverse of format_game; throws MalformedGame on any deviation from
/// the canonical grammar.
SymmetricGame parse_game(const std::string& text);

/// Reads one game per line; '#' starts a comment, blank lines skipped.
std::vector<SymmetricGame> read_game_file(std::istream& in);

}  // namespace xorgames

#endif
