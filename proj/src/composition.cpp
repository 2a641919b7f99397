#include "ribbons/composition.hpp"

#include "ribbons/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ribbons {

namespace {

std::vector<int> parse_parts(const std::string& text, const char* what) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    std::vector<int> parts;
    if (s.empty())
        return parts;
    if (s.find(',') == std::string::npos) {
        // Compact form: one digit per part.
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string(what) + ": bad compact literal '" +
                                            text + "'");
            parts.push_back(c - '0');
        }
        return parts;
    }
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                return c >= '0' && c <= '9';
            }))
            throw std::invalid_argument(std::string(what) + ": bad part '" + tok + "' in '" +
                                        text + "'");
        long v = std::stol(tok);
        if (v < 1 || v > 1000000)
            throw std::invalid_argument(std::string(what) + ": part out of range in '" + text +
                                        "'");
        parts.push_back(static_cast<int>(v));
    }
    if (!s.empty() && s.back() == ',')
        throw std::invalid_argument(std::string(what) + ": trailing comma in '" + text + "'");
    return parts;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

int checked_sum(const std::vector<int>& parts, const char* what) {
    long long n = 0;
    for (int p : parts) {
        if (p < 1)
            throw std::invalid_argument(std::string(what) + ": parts must be positive");
        n += p;
    }
    if (n > 1000000)
        throw std::invalid_argument(std::string(what) + ": size too large");
    return static_cast<int>(n);
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    size_ = checked_sum(parts_, "composition");
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::parse(const std::string& text) {
    return Composition(parse_parts(text, "composition"));
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(std::move(p));
}

std::string Composition::str() const { return join_parts(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    size_ = checked_sum(parts_, "partition");
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
    return Partition(parse_parts(text, "partition"));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty())
        return Partition();
    conj.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

Composition Partition::as_composition() const { return Composition(parts_); }

std::string Partition::str() const { return join_parts(parts_); }

DescentSet::DescentSet(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
    if (n_ < 1)
        throw std::invalid_argument("descent set: n must be positive");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1 || elements_[i] > n_ - 1)
            throw std::invalid_argument("descent set: element outside [n-1]");
        if (i && elements_[i - 1] >= elements_[i])
            throw std::invalid_argument("descent set: elements must be strictly increasing");
    }
}

bool DescentSet::contains(int x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string DescentSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(elements_[i]);
    }
    return out;
}

DescentSet descent_set(const Composition& beta) {
    if (beta.empty())
        throw std::invalid_argument("descent_set: empty composition");
    std::vector<int> sums;
    int acc = 0;
    for (int i = 0; i + 1 < beta.length(); ++i) {
        acc += beta.part(i);
        sums.push_back(acc);
    }
    return DescentSet(beta.size(), std::move(sums));
}

Composition composition_of(const DescentSet& s) {
    std::vector<int> parts;
    int prev = 0;
    for (int x : s.elements()) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(s.n() - prev);
    return Composition(std::move(parts));
}

Composition reverse(const Composition& beta) { return beta.reversed(); }

Partition sort_to_partition(const Composition& beta) {
    std::vector<int> p = beta.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

void PartitionMultiset::add(const Partition& p, long long k) {
    if (k == 0)
        return;
    auto it = counts_.find(p);
    if (it == counts_.end()) {
        counts_.emplace(p, k);
        return;
    }
    it->second += k;
    if (it->second == 0)
        counts_.erase(it);
}

long long PartitionMultiset::multiplicity(const Partition& p) const {
    auto it = counts_.find(p);
    return it == counts_.end() ? 0 : it->second;
}

long long PartitionMultiset::total() const {
    long long t = 0;
    for (const auto& [p, k] : counts_)
        t += k;
    return t;
}

std::string PartitionMultiset::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [p, k] : counts_) {
        if (!first)
            out += ", ";
        first = false;
        out += '"' + p.str() + "\": " + std::to_string(k);
    }
    out += '}';
    return out;
}

std::vector<Composition> coarsenings(const Composition& beta) {
    int l = beta.length();
    if (l == 0)
        return {Composition()};
    std::vector<Composition> out;
    out.reserve(std::size_t(1) << (l - 1));
    for (unsigned long mask = 0; mask < (1ul << (l - 1)); ++mask) {
        std::vector<int> parts;
        int cur = beta.part(0);
        for (int i = 0; i + 1 < l; ++i) {
            if (mask & (1ul << i)) {
                cur += beta.part(i + 1); // merge across boundary i
            } else {
                parts.push_back(cur);
                cur = beta.part(i + 1);
            }
        }
        parts.push_back(cur);
        out.push_back(Composition(std::move(parts)));
    }
    return out;
}

PartitionMultiset coarsening_multiset(const Composition& beta) {
    PartitionMultiset m;
    for (const Composition& a : coarsenings(beta))
        m.add(sort_to_partition(a));
    return m;
}

int lex_compare(const Composition& a, const Composition& b) {
    if (a.parts() < b.parts())
        return -1;
    if (b.parts() < a.parts())
        return 1;
    return 0;
}

TypeProfile::TypeProfile(const Composition& beta) : n_(beta.size()) {
    if (beta.empty())
        throw std::invalid_argument("type_profile: empty composition");
    DescentSet s = descent_set(beta);
    type_.assign(static_cast<std::size_t>(n_), 0);
    g_.assign(static_cast<std::size_t>(n_), 0);
    h_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 1; i < n_; ++i) {
        bool in_i = s.contains(i);
        bool in_mirror = s.contains(n_ - i);
        int t;
        if (2 * i == n_)
            t = in_i ? 2 : 0; // i is its own mirror: counted doubled
        else
            t = (in_i ? 1 : 0) + (in_mirror ? 1 : 0);
        type_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(t);
        if (t == 1) {
            std::int8_t v = in_i ? 1 : -1;
            g_[static_cast<std::size_t>(i)] = v;
            h_[static_cast<std::size_t>(i)] = v;
        } else if (t == 2) {
            h_[static_cast<std::size_t>(i)] = 2;
        }
    }
}

int TypeProfile::index(long long x) const {
    long long r = x % n_;
    if (r < 0)
        r += n_;
    return static_cast<int>(r);
}

int TypeProfile::type_of(long long x) const {
    return type_[static_cast<std::size_t>(index(x))];
}

int TypeProfile::g(long long x) const { return g_[static_cast<std::size_t>(index(x))]; }

int TypeProfile::h(long long x) const { return h_[static_cast<std::size_t>(index(x))]; }

TypeProfile type_profile(const Composition& beta) { return TypeProfile(beta); }

namespace {

void gen_compositions(int remaining, std::vector<int>& cur,
                      std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition(cur));
        return;
    }
    for (int a = 1; a <= remaining; ++a) {
        cur.push_back(a);
        gen_compositions(remaining - a, cur, out);
        cur.pop_back();
    }
}

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("compositions_of: negative n");
    if (n > 24)
        throw ResourceError("compositions_of: n > 24");
    std::vector<Composition> out;
    std::vector<int> cur;
    gen_compositions(n, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Composition> refinements(const Composition& beta) {
    std::vector<Composition> out;
    std::vector<std::vector<Composition>> per_part;
    per_part.reserve(static_cast<std::size_t>(beta.length()));
    for (int p : beta.parts())
        per_part.push_back(compositions_of(p));
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == per_part.size()) {
            out.push_back(Composition(cur));
            return;
        }
        for (const Composition& piece : per_part[i]) {
            std::size_t mark = cur.size();
            cur.insert(cur.end(), piece.parts().begin(), piece.parts().end());
            rec(i + 1);
            cur.resize(mark);
        }
    };
    rec(0);
    return out;
}

} // namespace ribbons
