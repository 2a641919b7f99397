#include "ribbons/perms.hpp"

#include "ribbons/comp_ops.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbons {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation: images must be a rearrangement of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0)
        throw std::invalid_argument("permutation: negative n");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    std::vector<int> im;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("permutation: bad compact literal '" + text + "'");
            im.push_back(c - '0');
        }
    } else {
        std::stringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty() ||
                !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("permutation: bad entry '" + tok + "'");
            im.push_back(std::stoi(tok));
        }
    }
    return Permutation(std::move(im));
}

int Permutation::image(int i) const {
    if (i < 1 || i > n())
        throw std::invalid_argument("permutation: index out of range");
    return images_[static_cast<std::size_t>(i) - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::star() const {
    int m = n();
    std::vector<int> im(images_.size());
    for (int i = 1; i <= m; ++i)
        im[static_cast<std::size_t>(i) - 1] = m + 1 - image(m + 1 - i);
    return Permutation(std::move(im));
}

std::string Permutation::str() const {
    std::string out;
    bool compact = n() <= 9;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!compact && i)
            out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

DescentSet descents(const Permutation& p) {
    if (p.n() == 0)
        throw std::invalid_argument("descents: empty permutation");
    std::vector<int> des;
    for (int i = 1; i < p.n(); ++i)
        if (p.image(i) > p.image(i + 1))
            des.push_back(i);
    return DescentSet(p.n(), std::move(des));
}

Composition descent_composition(const Permutation& p) {
    return composition_of(descents(p));
}

Permutation tensor(const Permutation& sigma, const Permutation& tau) {
    int m = sigma.n(), k = tau.n();
    if (m == 0 || k == 0)
        throw std::invalid_argument("tensor: empty permutation");
    std::vector<int> im(static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= k; ++j)
            im[static_cast<std::size_t>((i - 1) * k + j) - 1] =
                (sigma.image(i) - 1) * k + tau.image(j);
    return Permutation(std::move(im));
}

bool verify_tensor_descents(const Permutation& sigma, const Permutation& tau) {
    Composition composed = circ(descent_composition(sigma), descent_composition(tau));
    return descents(tensor(sigma, tau)) == descent_set(composed);
}

int DescentPairMatrix::index_of(const Composition& beta) const {
    auto it = std::lower_bound(comps.begin(), comps.end(), beta);
    if (it == comps.end() || *it != beta)
        throw std::invalid_argument("descent matrix: composition of the wrong size");
    return static_cast<int>(it - comps.begin());
}

const std::vector<long long>& DescentPairMatrix::row(const Composition& beta) const {
    return counts[static_cast<std::size_t>(index_of(beta))];
}

DescentPairMatrix descent_pair_matrix(int n) {
    if (n < 1)
        throw std::invalid_argument("descent matrix: n must be positive");
    if (n > 9)
        throw ResourceError("descent matrix: n > 9");
    DescentPairMatrix out;
    out.n = n;
    out.comps = compositions_of(n);
    std::size_t count = out.comps.size();
    out.counts.assign(count, std::vector<long long>(count, 0));

    // Map descent bitmask over [n-1] to the composition index.
    std::vector<int> mask_to_index(std::size_t(1) << std::max(0, n - 1), -1);
    for (std::size_t idx = 0; idx < count; ++idx) {
        unsigned mask = 0;
        DescentSet s = descent_set(out.comps[idx]);
        for (int x : s.elements())
            mask |= 1u << (x - 1);
        mask_to_index[mask] = static_cast<int>(idx);
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> inv(static_cast<std::size_t>(n));
    do {
        unsigned dmask = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1])
                dmask |= 1u << i;
        for (int i = 0; i < n; ++i)
            inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) - 1] = i + 1;
        unsigned imask = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(i) + 1])
                imask |= 1u << i;
        ++out.counts[static_cast<std::size_t>(mask_to_index[dmask])]
                    [static_cast<std::size_t>(mask_to_index[imask])];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace ribbons
