#include "tdl/config.hpp"

#include <bit>

#include "tdl/errors.hpp"

namespace tdl {

namespace {

int word_count(int n) { return (n + 63) / 64; }

}  // namespace

Config::Config(int n) : n_(n), w_(word_count(n), 0) {
    if (n < 0) fail(ErrorKind::InvalidParams, "negative configuration length");
}

Config Config::from_mask(int n, std::uint64_t bits) {
    Config c(n);
    c.assign_mask(bits);
    return c;
}

Config Config::from_nodes(int n, const std::vector<int>& nodes) {
    Config c(n);
    for (int v : nodes) {
        if (v < 0 || v >= n)
            fail(ErrorKind::InvalidNode, "node " + std::to_string(v) + " outside 0.." +
                                             std::to_string(n - 1));
        c.set(v, true);
    }
    return c;
}

Config Config::parse(const std::string& bitstring) {
    Config c(static_cast<int>(bitstring.size()));
    for (int i = 0; i < c.n_; ++i) {
        char ch = bitstring[static_cast<size_t>(i)];
        if (ch != '0' && ch != '1')
            fail(ErrorKind::InvalidParams, "configuration strings use only 0 and 1");
        if (ch == '1') c.set(i, true);
    }
    return c;
}

void Config::set(int v, bool black) {
    std::uint64_t bit = 1ULL << (v & 63);
    if (black)
        w_[v >> 6] |= bit;
    else
        w_[v >> 6] &= ~bit;
}

void Config::assign_mask(std::uint64_t bits) {
    if (n_ > 64) fail(ErrorKind::InvalidParams, "mask assignment needs n <= 64");
    if (!w_.empty()) {
        std::uint64_t tail = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
        w_[0] = bits & tail;
    }
}

void Config::clear() {
    for (auto& w : w_) w = 0;
}

int Config::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool Config::none() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

bool Config::subset_of(const Config& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

int Config::count_and(const Config& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

int Config::count_andnot(const Config& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
    return c;
}

std::vector<int> Config::nodes() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (get(v)) out.push_back(v);
    return out;
}

std::string Config::to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int v = 0; v < n_; ++v)
        if (get(v)) s[static_cast<size_t>(v)] = '1';
    return s;
}

}  // namespace tdl
