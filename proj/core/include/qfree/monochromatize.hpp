#pragma once

// Rearranging an optimal non-adjacent configuration in an axis-legged
// triangle into a single-colour one of the same size.
//
// The sweep walks the diagonals x + y = k upwards. The points on diagonals
// below k are kept monochromatic; when diagonal k carries points of the
// other colour they are moved:
//   case 1/2: some position P on the diagonal is vacant (case 1 when P lies
//             outside the triangle, case 2 when inside). Points left of P
//             step down, points right of P step left, onto diagonal k - 1.
//   case 3:   the whole diagonal is occupied, so diagonal k - 1 is empty and
//             everything below steps up by one.

#include <string>
#include <variant>
#include <vector>

#include "qfree/arith.hpp"
#include "qfree/independent.hpp"
#include "qfree/lattice.hpp"

namespace qfree {

/// x >= 0, y >= 0 and either a*x + b*y <= c (rational mode) or p^x q^y <= n
/// (integer mode).
class Triangle {
public:
    static Triangle rational(Rational a, Rational b, Rational c);
    static Triangle integer(BigInt p, BigInt q, BigInt n);

    bool contains(long x, long y) const;
    /// All lattice points, ordered by x then y.
    std::vector<LatticeVec> lattice_points() const;
    std::string describe() const;

private:
    struct RationalMode {
        Rational a, b, c;
    };
    struct IntegerMode {
        BigInt p, q, n;
    };
    explicit Triangle(std::variant<RationalMode, IntegerMode> mode) : mode_(std::move(mode)) {}

    std::variant<RationalMode, IntegerMode> mode_;
};

struct SweepStep {
    int diagonal;
    int sweep_case;  // 1, 2 or 3
    std::size_t moved;
};

struct MonochromatizeResult {
    std::vector<LatticeVec> points;
    Color color = Color::white;
    std::vector<SweepStep> steps;
};

struct MonochromatizeOptions {
    /// Reject inputs that are not of maximum size (checked when within the search cap).
    bool require_maximum = true;
    SearchOptions search;
};

/// Throws DomainError for inputs outside the triangle, with adjacent points,
/// or (when required) of non-maximum size; SweepError if a sweep step fails.
MonochromatizeResult monochromatize(const Triangle& triangle, const std::vector<LatticeVec>& points,
                                    const MonochromatizeOptions& options = {});

}  // namespace qfree
