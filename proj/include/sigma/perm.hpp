#pragma once

#include <string>
#include <vector>

#include "sigma/errors.hpp"

namespace sigma {

/// A permutation of {0..d-1}, stored as its image array.
struct Permutation {
    std::vector<int> images;

    int degree() const { return int(images.size()); }
    int operator()(int i) const { return images[size_t(i)]; }

    static Permutation identity(int degree) {
        Permutation p;
        p.images.resize(size_t(degree));
        for (int i = 0; i < degree; ++i) p.images[size_t(i)] = i;
        return p;
    }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images[size_t(i)] != i) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
};

inline void validate_permutation(const Permutation& p) {
    std::vector<char> seen(p.images.size(), 0);
    for (int img : p.images) {
        if (img < 0 || img >= p.degree() || seen[size_t(img)])
            throw invalid_permutation("image array is not a bijection on {0.." +
                                      std::to_string(p.degree() - 1) + "}");
        seen[size_t(img)] = 1;
    }
}

/// (a*b)(i) = a(b(i)); apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.images.resize(a.images.size());
    for (int i = 0; i < a.degree(); ++i)
        r.images[size_t(i)] = a(b(i));
    return r;
}

inline Permutation inverse(const Permutation& p) {
    Permutation r;
    r.images.resize(p.images.size());
    for (int i = 0; i < p.degree(); ++i) r.images[size_t(p(i))] = i;
    return r;
}

/// Pads a permutation to a larger degree, fixing the new points.
inline Permutation pad(const Permutation& p, int degree) {
    Permutation r = Permutation::identity(degree);
    for (int i = 0; i < p.degree(); ++i) r.images[size_t(i)] = p(i);
    return r;
}

inline std::string format_cycles(const Permutation& p) {
    if (p.is_identity()) return "e";
    std::string out;
    std::vector<char> done(p.images.size(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (done[size_t(i)] || p(i) == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            done[size_t(j)] = 1;
            j = p(j);
            first = false;
        } while (j != i);
        out += ")";
    }
    return out;
}

/// Parses one permutation in cycle notation, e.g. "(0 1)(2 3)" or "e".
/// Points may be separated by spaces or commas.
inline Permutation parse_cycles(const std::string& text, int min_degree = 0) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (text.substr(i) == "e" || text.substr(i) == "()") {
        return Permutation::identity(min_degree > 0 ? min_degree : 1);
    }
    int max_point = min_degree - 1;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw parse_error("expected '(' in permutation: " + text);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            size_t start = i;
            while (i < text.size() && isdigit(text[i])) ++i;
            if (start == i)
                throw parse_error("expected point index in permutation: " + text);
            int pt = std::stoi(text.substr(start, i - start));
            max_point = std::max(max_point, pt);
            cycle.push_back(pt);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (cycle.size() < 2)
            throw parse_error("cycle with fewer than two points: " + text);
        cycles.push_back(std::move(cycle));
    }
    Permutation p = Permutation::identity(max_point + 1);
    std::vector<char> moved(size_t(max_point + 1), 0);
    for (auto& cycle : cycles) {
        for (size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            if (moved[size_t(from)])
                throw invalid_permutation("point " + std::to_string(from) +
                                          " repeated in cycles: " + text);
            moved[size_t(from)] = 1;
            p.images[size_t(from)] = to;
        }
    }
    validate_permutation(p);
    return p;
}

struct PermutationHash {
    size_t operator()(const Permutation& p) const {
        size_t h = 14695981039346656037ull;
        for (int x : p.images) {
            h ^= size_t(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace sigma
