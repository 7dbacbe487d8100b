#include "ramsey/coloring.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/prng.hpp"

namespace ramsey {

TwoColoring TwoColoring::flipped() const {
    int n = N();
    Graph blue(n);
    for (int u = 0; u < n; ++u) {
        Bitset row = blue_nbrs(u);
        for (int v = row.next(u); v != -1; v = row.next(v)) blue.add_edge(u, v);
    }
    return TwoColoring(std::move(blue));
}

bool is_mono_pair(const TwoColoring& c, Color color, const Bitset& X, const Bitset& Y) {
    if (X.intersects(Y)) throw precondition_error("is_mono_pair: X and Y overlap");
    for (int u = X.first(); u != -1; u = X.next(u)) {
        const Bitset& reds = c.red_nbrs(u);
        int red_in_X = reds.count_and(X);
        int red_in_Y = reds.count_and(Y);
        if (color == Color::red) {
            if (red_in_X != X.count() - 1) return false;
            if (red_in_Y != Y.count()) return false;
        } else {
            if (red_in_X != 0 || red_in_Y != 0) return false;
        }
    }
    return true;
}

namespace {

std::vector<uint64_t> stream_words(uint64_t seed, size_t count) {
    SplitMix64 g(seed);
    std::vector<uint64_t> w(count);
    for (auto& x : w) x = g.next();
    return w;
}

}  // namespace

TwoColoring gen_uniform(int N, uint64_t seed) {
    size_t bits = (size_t)N * N;
    auto words = stream_words(seed, (bits + 63) / 64);
    Graph red(N);
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v) {
            size_t b = (size_t)u * N + v;
            if ((words[b / 64] >> (b % 64)) & 1) red.add_edge(u, v);
        }
    return TwoColoring(std::move(red));
}

TwoColoring gen_biased(int N, const Rat& p, uint64_t seed) {
    if (p < 0 || p > 1) throw precondition_error("gen_biased: p outside [0,1]");
    auto words = stream_words(seed, (size_t)N * N);
    Int num = numerator(p), den = denominator(p);
    bool small = num < (Int(1) << 62) && den < (Int(1) << 62);
    Graph red(N);
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v) {
            uint64_t w = words[(size_t)u * N + v];
            bool is_red;
            if (small) {
                unsigned __int128 lhs = (unsigned __int128)w * (uint64_t)den;
                unsigned __int128 rhs = (unsigned __int128)(uint64_t)num << 64;
                is_red = lhs < rhs;
            } else {
                is_red = Int(w) * den < (num << 64);
            }
            if (is_red) red.add_edge(u, v);
        }
    return TwoColoring(std::move(red));
}

TwoColoring gen_paley(int N) {
    auto is_prime = [](int n) {
        if (n < 2) return false;
        for (int d = 2; (long)d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    if (!is_prime(N) || N % 4 != 1)
        throw precondition_error("gen_paley: N must be a prime = 1 mod 4");
    std::vector<bool> qr(N, false);
    for (int x = 1; x < N; ++x) qr[(int)((long)x * x % N)] = true;
    Graph red(N);
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
            if (qr[((u - v) % N + N) % N]) red.add_edge(u, v);
    return TwoColoring(std::move(red));
}

TwoColoring parse_coloring(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph red;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<std::string> t;
        std::string w;
        while (ss >> w) t.push_back(w);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (have_header || t.size() != 3 || t[1] != "kn2")
                throw parse_error("line " + std::to_string(lineno) + ": expected 'p kn2 <N>'");
            int n;
            try {
                size_t used = 0;
                n = std::stoi(t[2], &used);
                if (used != t[2].size() || n < 0) throw parse_error("");
            } catch (...) {
                throw parse_error("line " + std::to_string(lineno) + ": bad N '" + t[2] + "'");
            }
            red = Graph(n);
            have_header = true;
        } else if (t[0] == "r") {
            if (!have_header)
                throw parse_error("line " + std::to_string(lineno) + ": edge before header");
            if (t.size() != 3)
                throw parse_error("line " + std::to_string(lineno) + ": expected 'r <u> <v>'");
            long u, v;
            try {
                size_t used1 = 0, used2 = 0;
                u = std::stol(t[1], &used1);
                v = std::stol(t[2], &used2);
                if (used1 != t[1].size() || used2 != t[2].size()) throw parse_error("");
            } catch (...) {
                throw parse_error("line " + std::to_string(lineno) + ": bad vertex index");
            }
            if (u < 1 || v < 1 || u > red.n() || v > red.n())
                throw parse_error("line " + std::to_string(lineno) + ": vertex out of range");
            try {
                red.add_edge((int)u - 1, (int)v - 1);
            } catch (const parse_error& e) {
                throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown record '" + t[0] + "'");
        }
    }
    if (!have_header) throw parse_error("missing 'p kn2' header");
    return TwoColoring(std::move(red));
}

TwoColoring parse_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_coloring(in);
}

std::string format_coloring(const TwoColoring& c) {
    std::ostringstream out;
    out << "p kn2 " << c.N() << "\n";
    for (int u = 0; u < c.N(); ++u) {
        const Bitset& row = c.red_nbrs(u);
        for (int v = row.next(u); v != -1; v = row.next(v))
            out << "r " << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

}  // namespace ramsey
