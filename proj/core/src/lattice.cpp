#include <algorithm>
#include <numeric>

#include "json_detail.hpp"
#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"
#include "parallel.hpp"

namespace novikov {

namespace {

// Image of basis monomial `m` under sum_sigma chi_lambda(sigma) sigma, as dense coordinates.
std::vector<Rational> isotypic_image(int n, const Partition& lambda, std::size_t m) {
    const NovBasis& basis = nov_basis(n);
    std::vector<Rational> v(basis.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        const long chi = character(lambda, cycle_type(perm));
        if (chi == 0) continue;
        v[basis.permutation_map(perm)[m]] += Rational(chi);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return v;
}

NovElement node_generator(const IdealBasis& ideal, int n, const Partition& lambda) {
    const NovBasis& basis = nov_basis(n);
    for (std::size_t m = 0; m < basis.size(); ++m) {
        NovElement e = ideal.reduce(NovElement::from_dense(n, isotypic_image(n, lambda, m)));
        if (!e.is_zero()) return e;
    }
    throw ConsistencyError("no generator found for " + partition_label(lambda) + " in arity " + std::to_string(n));
}

std::vector<NovElement> rho_generators(const ParamPoint& rho) { return family_generators(Family::O, rho).embedded; }

} // namespace

std::string LatticeNode::label() const { return partition_label(partition); }

std::optional<std::size_t> LatticeReport::find(int arity, const Partition& p) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].arity == arity && nodes[i].partition == p) return i;
    }
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> LatticeReport::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t k = nodes.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!implies[i][j]) continue;
            bool covered = true;
            for (std::size_t m = 0; m < k && covered; ++m) {
                if (m != i && m != j && implies[i][m] && implies[m][j]) covered = false;
            }
            if (covered) out.emplace_back(i, j);
        }
    }
    return out;
}

LatticeReport lattice_report(const ParamPoint& rho, int max_arity, unsigned jobs) {
    if (max_arity < 1 || max_arity > kDefaultArityCap) {
        throw ResourceError("lattice arity must lie in 1.." + std::to_string(kDefaultArityCap));
    }
    LatticeReport r;
    r.rho = rho;
    r.max_arity = max_arity;
    const auto gens = rho_generators(rho);
    const IdealBasis ideal = build_ideal(gens, max_arity);

    std::vector<std::pair<int, Partition>> wanted;
    for (int n = 1; n <= max_arity; ++n) {
        for (const auto& [p, mult] : decompose(ideal, n).modules) {
            if (mult > 1) {
                throw DomainError(partition_label(p) + " has multiplicity " + std::to_string(mult) + " in arity " +
                                  std::to_string(n) + "; the lattice needs multiplicity one");
            }
            wanted.emplace_back(n, p);
        }
    }
    r.nodes.resize(wanted.size());
    detail::parallel_for(wanted.size(), jobs, [&](std::size_t i) {
        r.nodes[i] = LatticeNode{wanted[i].first, wanted[i].second,
                                 node_generator(ideal, wanted[i].first, wanted[i].second)};
    });

    r.implies.assign(r.nodes.size(), std::vector<bool>(r.nodes.size(), false));
    std::vector<std::vector<char>> rows(r.nodes.size(), std::vector<char>(r.nodes.size(), 0));
    detail::parallel_for(r.nodes.size(), jobs, [&](std::size_t i) {
        auto g = gens;
        g.push_back(r.nodes[i].generator);
        const IdealBasis bigger = build_ideal(g, max_arity);
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            rows[i][j] = (i != j && bigger.contains(r.nodes[j].generator)) ? 1 : 0;
        }
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) r.implies[i][j] = rows[i][j] != 0;
    }
    return r;
}

std::vector<std::size_t> implied_nodes(const LatticeReport& report, const NovElement& element) {
    if (element.is_zero()) return {};
    auto gens = rho_generators(report.rho);
    gens.push_back(element);
    const IdealBasis ideal = build_ideal(gens, report.max_arity);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < report.nodes.size(); ++j) {
        if (ideal.contains(report.nodes[j].generator)) out.push_back(j);
    }
    return out;
}

std::string to_json(const LatticeReport& r) {
    using detail::json;
    json nodes = json::array();
    for (const auto& n : r.nodes) {
        nodes.push_back({{"arity", n.arity},
                         {"partition", n.partition},
                         {"label", n.label()},
                         {"generator", json::parse(to_json(n.generator))}});
    }
    json edges = json::array();
    for (const auto& [a, b] : r.hasse_edges()) edges.push_back({a, b});
    json implies = json::array();
    for (const auto& row : r.implies) {
        json jr = json::array();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j]) jr.push_back(j);
        }
        implies.push_back(jr);
    }
    return json{{"rho", r.rho.str()},
                {"max_arity", r.max_arity},
                {"nodes", nodes},
                {"implies", implies},
                {"hasse", edges}}
        .dump();
}

} // namespace novikov
