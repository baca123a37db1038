#ifndef starcolor_star_forest_hpp
#define starcolor_star_forest_hpp

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "starcolor/errors.hpp"

namespace starcolor {

/// Disjoint union of stars K_{1,k}, stored as the multiset of leaf counts in
/// ascending order. k = 0 is a single vertex, k = 1 an edge.
class StarForest {
public:
    StarForest() = default;

    explicit StarForest(std::vector<int> leaf_counts) : stars_(std::move(leaf_counts)) {
        for (int k : stars_) {
            if (k < 0) throw std::invalid_argument("star leaf count must be nonnegative");
        }
        std::sort(stars_.begin(), stars_.end());
    }

    const std::vector<int>& stars() const { return stars_; }
    std::size_t component_count() const { return stars_.size(); }
    bool empty() const { return stars_.empty(); }

    std::size_t vertex_count() const {
        std::size_t total = 0;
        for (int k : stars_) total += static_cast<std::size_t>(k) + 1;
        return total;
    }

    /// The pattern with its smallest star removed.
    StarForest without_smallest() const {
        StarForest rest;
        rest.stars_.assign(stars_.begin() + (stars_.empty() ? 0 : 1), stars_.end());
        return rest;
    }

    /// Canonical spelling, e.g. "star:1+star:1+star:3"; "empty" for no stars.
    std::string to_string() const {
        if (stars_.empty()) return "empty";
        std::string out;
        for (std::size_t i = 0; i < stars_.size(); ++i) {
            if (i) out += '+';
            out += "star:" + std::to_string(stars_[i]);
        }
        return out;
    }

    friend bool operator==(const StarForest&, const StarForest&) = default;

private:
    std::vector<int> stars_;
};

// Pattern grammar (whitespace ignored, case sensitive):
//   pattern := "empty" | term ("+" term)*
//   term    := [count "x"] atom
//   atom    := "star:" k | "K1," k | "K_{1," k "}" | "K2" | "K1"
// "K2" is star:1 and "K1" is star:0. Example: "K1,3+2xK2" = stars [1, 1, 3].
inline StarForest parse_pattern(std::string_view text) {
    std::string s;
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            offsets.push_back(i);
        }
    }
    offsets.push_back(text.size());
    if (s.empty()) throw ParseError("pattern: empty string (use \"empty\" for the empty forest)", 0);
    if (s == "empty") return StarForest{};

    std::vector<int> stars;
    std::size_t pos = 0;

    auto fail = [&](const std::string& what) -> void { throw ParseError("pattern: " + what, offsets[pos]); };
    auto read_int = [&]() -> int {
        const std::size_t start = pos;
        long value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            if (value > 1000) fail("number too large");
            ++pos;
        }
        if (pos == start) fail("expected a number");
        return static_cast<int>(value);
    };
    auto eat = [&](std::string_view tok) {
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    };

    while (true) {
        int count = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            count = read_int();
            if (!eat("x")) fail("expected 'x' after multiplicity");
            if (count == 0) fail("multiplicity must be positive");
        }
        int k = 0;
        if (eat("star:")) {
            k = read_int();
        } else if (eat("K_{1,")) {
            k = read_int();
            if (!eat("}")) fail("expected '}'");
        } else if (eat("K1,")) {
            k = read_int();
        } else if (eat("K2")) {
            k = 1;
        } else if (eat("K1")) {
            k = 0;
        } else {
            fail("expected star:k, K1,k, K2 or K1");
        }
        stars.insert(stars.end(), static_cast<std::size_t>(count), k);
        if (pos == s.size()) break;
        if (!eat("+")) fail("expected '+'");
    }
    return StarForest(std::move(stars));
}

} // namespace starcolor

#endif // starcolor_star_forest_hpp
