#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "novikov/magma.hpp"
#include "novikov/matrix.hpp"
#include "novikov/novikov.hpp"
#include "novikov/rep_sn.hpp"
#include "novikov/shuffle.hpp"

namespace novikov {

/// Quadratic presentation with one binary generator. Relations are multilinear of
/// arity 3: magmatic trees for Symmetry::none (polarized trees are expanded),
/// "·" trees for sym, "[]" trees for antisym. Relations are read up to S_3-span.
struct QuadraticPresentation {
    Symmetry generator = Symmetry::none;
    std::vector<MagPoly> relations;
};

/// Arity-3 monomial basis: 12 combs for none, 3 for sym and antisym.
const std::vector<Tree>& quadratic_basis(Symmetry generator);
Symmetry dual_symmetry(Symmetry generator);

/// Coordinates of a multilinear arity-3 element in quadratic_basis(generator).
std::vector<Rational> quadratic_coordinates(Symmetry generator, const MagPoly& f);
/// Diagonal pairing between basis(g) and basis(dual_symmetry(g)): for none,
/// sgn(σ) on left combs and -sgn(σ) on right combs; for sym/antisym,
/// <(xi·xj)·xk, [[xi,xj],xk]> = sgn(ijk).
Rational quadratic_pairing_sign(Symmetry generator, std::size_t basis_index);

/// Reduced row echelon basis of the S_3-span of the relations.
Matrix<Rational> relation_space(const QuadraticPresentation& p);
std::size_t relation_rank(const QuadraticPresentation& p);
/// Relations of the dual: the annihilator of the relation space under the pairing.
/// Throws PreconditionError for relations that are not multilinear of arity 3.
QuadraticPresentation koszul_dual(const QuadraticPresentation& p);
bool same_relation_space(const QuadraticPresentation& a, const QuadraticPresentation& b);
/// xy -> yx on every relation (magmatic presentations only).
QuadraticPresentation mirrored(const QuadraticPresentation& p);

/// Arity-3 relations of a Novikov quotient: the kernel of magmatic monomials in Nov(3)/I(3).
QuadraticPresentation arity3_presentation(const IdealBasis& ideal);
/// S_3-decomposition of the arity-3 quotient (free arity-3 space modulo relations).
ModuleDecomposition arity3_decomposition(const QuadraticPresentation& p);

/// The point (x:y) with S_3-span(x·a + y·b) equal to the relation space of `target`,
/// normalized with first nonzero coordinate 1; nullopt when no point of the pencil fits.
std::optional<std::pair<Rational, Rational>> match_pencil(const QuadraticPresentation& target, const MagPoly& a,
                                                          const MagPoly& b);

} // namespace novikov
