#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tdl {

// Fixed-length bit vector over node indices 0..n-1; bit set = node is black.
class Config {
public:
    Config() = default;
    explicit Config(int n);

    // Low 'n' bits of 'bits' (requires n <= 64); used by exhaustive sweeps.
    static Config from_mask(int n, std::uint64_t bits);
    static Config from_nodes(int n, const std::vector<int>& nodes);
    static Config parse(const std::string& bitstring);

    int size() const { return n_; }
    bool get(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v, bool black);
    void assign_mask(std::uint64_t bits);  // requires n <= 64
    void clear();

    int count() const;
    bool all() const { return count() == n_; }
    bool none() const;
    bool subset_of(const Config& o) const;
    int count_and(const Config& o) const;     // |this & o|
    int count_andnot(const Config& o) const;  // |this & ~o|

    std::vector<int> nodes() const;
    std::string to_string() const;

    bool operator==(const Config& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace tdl
