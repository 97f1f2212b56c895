#include "mhs/signature.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mhslab {

Signature::Signature(std::vector<long> entries) : entries_(std::move(entries)) {
    for (long e : entries_)
        if (e == 0) throw std::invalid_argument("signature entries must be nonzero");
}

long Signature::weight() const {
    long w = 0;
    for (long e : entries_) w += std::labs(e);
    return w;
}

bool Signature::all_positive() const {
    for (long e : entries_)
        if (e < 0) return false;
    return true;
}

std::string Signature::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    out += ')';
    return out;
}

namespace {

long parse_long(const std::string& s, std::size_t& pos) {
    std::size_t used = 0;
    long v;
    try {
        v = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("signature: expected integer at '" + s.substr(pos) + "'");
    }
    pos += used;
    return v;
}

}  // namespace

Signature parse_signature(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ',') { ++pos; continue; }
        if (s[pos] == '{') {
            std::size_t close = s.find('}', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("signature: unterminated '{'");
            std::vector<long> block;
            std::size_t bp = pos + 1;
            while (bp < close) {
                if (s[bp] == ',') { ++bp; continue; }
                block.push_back(parse_long(s, bp));
            }
            pos = close + 1;
            if (pos >= s.size() || s[pos] != '^')
                throw std::invalid_argument("signature: expected '^' after '}'");
            ++pos;
            long reps = parse_long(s, pos);
            if (reps < 0) throw std::invalid_argument("signature: repeat count must be >= 0");
            for (long r = 0; r < reps; ++r)
                out.insert(out.end(), block.begin(), block.end());
        } else {
            out.push_back(parse_long(s, pos));
        }
    }
    return Signature(std::move(out));
}

Signature Composition::coarsened() const {
    std::vector<long> s;
    for (std::size_t i = 0; i + 1 < cut_points.size(); ++i) {
        long block = 0;
        for (std::size_t k = cut_points[i]; k < cut_points[i + 1]; ++k)
            block += source.entry(k);
        s.push_back(block);
    }
    return Signature(std::move(s));
}

std::vector<Composition> compositions_with_cuts(const Signature& t) {
    if (t.empty()) throw std::invalid_argument("compositions: empty signature");
    if (!t.all_positive()) throw std::invalid_argument("compositions: entries must be positive");
    std::size_t m = t.length();
    // interior cut subsets in lexicographic order of the cut point list
    std::vector<Composition> out;
    std::vector<std::vector<std::size_t>> interiors;
    std::vector<std::size_t> cur;
    // depth-first over positions 1..m-1 emits subsets in lex order:
    // {}, {1}, {1,2}, ..., {2}, ...
    auto rec = [&](auto&& self, std::size_t next) -> void {
        interiors.push_back(cur);
        for (std::size_t c = next; c <= m - 1; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    for (auto& in : interiors) {
        Composition comp;
        comp.source = t;
        comp.cut_points.push_back(0);
        comp.cut_points.insert(comp.cut_points.end(), in.begin(), in.end());
        comp.cut_points.push_back(m);
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Signature> compositions(const Signature& t) {
    std::vector<Signature> out;
    for (const Composition& c : compositions_with_cuts(t))
        out.push_back(c.coarsened());
    return out;
}

Signature repeat_block(const Signature& block, long m) {
    if (m < 0) throw std::invalid_argument("repeat_block: m must be >= 0");
    std::vector<long> out;
    out.reserve(block.length() * static_cast<std::size_t>(m));
    for (long r = 0; r < m; ++r)
        out.insert(out.end(), block.entries().begin(), block.entries().end());
    return Signature(std::move(out));
}

}  // namespace mhslab
