#include "blockcheck/isometry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace blockcheck {

std::string IsometryCandidate::to_string() const {
    std::ostringstream os;
    os << "sigma=(";
    for (size_t i = 0; i < permutation.size(); ++i) os << (i ? " " : "") << permutation[i] + 1;
    os << ") signs=(";
    for (size_t i = 0; i < signs.size(); ++i) os << (i ? " " : "") << (signs[i] > 0 ? "+" : "-");
    os << ")";
    return os.str();
}

PartialIsometry identity_partial(const GenCharLattice& l) {
    PartialIsometry p;
    for (size_t r = 0; r < l.basis().rows(); ++r) {
        std::vector<Int> v(l.basis().cols());
        for (size_t j = 0; j < v.size(); ++j) v[j] = l.basis().at(r, j);
        p.src_basis.push_back(v);
        p.tgt_images.push_back(v);
    }
    return p;
}

std::optional<IsometryCandidate> extend_isometry(const GenCharLattice& src, const GenCharLattice& tgt,
                                                 const PartialIsometry& partial) {
    const size_t n = src.table().num_irreducibles();
    if (tgt.table().num_irreducibles() != n) throw std::invalid_argument("extend_isometry: size mismatch");
    const size_t nb = partial.src_basis.size();
    if (partial.tgt_images.size() != nb) throw std::invalid_argument("extend_isometry: bad partial map");

    // The partial map must be an isometry of lattices.
    for (size_t a = 0; a < nb; ++a) {
        if (!src.contains(partial.src_basis[a]) || !tgt.contains(partial.tgt_images[a]))
            throw std::invalid_argument("extend_isometry: partial map not in the lattices");
        for (size_t b = 0; b < nb; ++b) {
            Int lhs = 0, rhs = 0;
            for (size_t j = 0; j < n; ++j) {
                lhs += partial.src_basis[a][j] * partial.src_basis[b][j];
                rhs += partial.tgt_images[a][j] * partial.tgt_images[b][j];
            }
            if (lhs != rhs) throw std::invalid_argument("extend_isometry: partial map not isometric");
        }
    }

    // Column constraint: sigma(i) = j with sign d requires
    // tgt_images[k][j] = d * src_basis[k][i] for every basis index k.
    std::vector<std::vector<std::pair<size_t, int>>> options(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (int d : {+1, -1}) {
                bool ok = true;
                for (size_t kb = 0; kb < nb && ok; ++kb)
                    ok = partial.tgt_images[kb][j] == d * partial.src_basis[kb][i];
                if (ok) options[i].emplace_back(j, d);
            }
        }
        if (options[i].empty()) return std::nullopt;
    }

    // Degree lists for the delta_i = delta_j pruning on equal degrees.
    std::vector<long long> sdeg(n), tdeg(n);
    for (size_t i = 0; i < n; ++i) sdeg[i] = src.table().degree(i);
    for (size_t j = 0; j < n; ++j) tdeg[j] = tgt.table().degree(j);

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return options[a].size() < options[b].size(); });

    std::vector<size_t> sigma(n, SIZE_MAX);
    std::vector<int> signs(n, 0);
    std::vector<bool> used(n, false);

    std::function<bool(size_t)> search = [&](size_t pos) -> bool {
        if (pos == n) return true;
        size_t i = order[pos];
        for (const auto& [j, d] : options[i]) {
            if (used[j]) continue;
            if (sdeg[i] != tdeg[j]) continue;  // degree-preserving bijection
            bool coherent = true;
            for (size_t i2 = 0; i2 < n && coherent; ++i2) {
                if (sigma[i2] == SIZE_MAX || i2 == i) continue;
                if (sdeg[i2] == sdeg[i] && signs[i2] != d) coherent = false;
            }
            if (!coherent) continue;
            sigma[i] = j;
            signs[i] = d;
            used[j] = true;
            if (search(pos + 1)) return true;
            sigma[i] = SIZE_MAX;
            signs[i] = 0;
            used[j] = false;
        }
        return false;
    };

    if (!search(0)) return std::nullopt;
    IsometryCandidate cand{sigma, signs};

    // Image of the source lattice must be the whole target lattice.
    IntMatrix mapped(src.rank(), n);
    for (size_t r = 0; r < src.rank(); ++r)
        for (size_t i = 0; i < n; ++i)
            mapped.at(r, cand.permutation[i]) = Int(cand.signs[i]) * src.basis().at(r, i);
    HermiteResult hr = hermite_normal_form(mapped);
    IntMatrix h(hr.rank, n);
    for (size_t r = 0; r < hr.rank; ++r)
        for (size_t j = 0; j < n; ++j) h.at(r, j) = hr.h.at(r, j);
    if (!(h == tgt.basis())) return std::nullopt;
    return cand;
}

PerfectnessReport check_perfect(const CharacterTable& src, const CharacterTable& tgt,
                                const IsometryCandidate& c) {
    const size_t n = src.num_irreducibles();
    unsigned e = std::lcm(src.conductor(), tgt.conductor());
    PerfectnessReport rep;
    for (size_t gc = 0; gc < src.classes().size(); ++gc) {
        long long cg = static_cast<long long>(src.group_order()) / src.classes()[gc].size;
        for (size_t hc = 0; hc < tgt.classes().size(); ++hc) {
            long long ch = static_cast<long long>(tgt.group_order()) / tgt.classes()[hc].size;
            CycInt mu(e);
            for (size_t i = 0; i < n; ++i) {
                CycInt term = src.value(i, gc).embed(e) * tgt.value(c.permutation[i], hc).conjugate().embed(e);
                if (c.signs[i] < 0) term = -term;
                mu += term;
            }
            bool greg = src.classes()[gc].two_regular;
            bool hreg = tgt.classes()[hc].two_regular;
            if (greg != hreg && !mu.is_zero()) {
                rep.separation = false;
                rep.separation_failures.emplace_back(gc, hc);
            }
            if (!mu.divisible_by(cg) || !mu.divisible_by(ch)) {
                rep.integrality = false;
                rep.integrality_failures.emplace_back(gc, hc);
            }
        }
    }
    return rep;
}

}  // namespace blockcheck
