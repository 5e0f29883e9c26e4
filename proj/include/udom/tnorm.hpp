/*
 * Copyright 2026 the udom authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef UDOM_TNORM_HPP
#define UDOM_TNORM_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "udom/value.hpp"

namespace udom {

enum class Archetype { lukasiewicz, product };

std::string archetype_name(Archetype a);

/// One summand of an ordinal sum: the restriction of the t-norm to
/// [lo, hi] is a rescaled copy of the archetype. Endpoints are idempotent.
struct Piece {
    double lo = 0.0;
    double hi = 1.0;
    Archetype kind = Archetype::lukasiewicz;
};

/// A continuous t-norm as an ordinal sum of Lukasiewicz/product pieces.
/// The empty piece list is the Godel t-norm: off every piece the operation
/// is min, which is exactly the idempotent regime of the decomposition.
class TNorm {
  public:
    TNorm() = default;

    static TNorm godel() { return TNorm(); }
    static TNorm lukasiewicz();
    static TNorm product();
    /// Validates ordering and disjoint interiors; rejects overlaps.
    static TNorm ordinal_sum(std::vector<Piece> pieces);

    static TNorm from_json(const nlohmann::json& j);
    static TNorm from_file(const std::string& path);
    nlohmann::json to_json() const;

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool has_product_piece() const;
    bool is_godel() const { return pieces_.empty(); }
    bool is_single_lukasiewicz() const;

    double conj(double x, double y) const;
    double residuum(double x, double y) const;

    Rat conj_exact(const Rat& x, const Rat& y) const;       // throws if a product piece exists
    Rat residuum_exact(const Rat& x, const Rat& y) const;   // throws if a product piece exists

    bool is_idempotent(double v, double eps = kEps) const;

    /// Piece whose closed interval contains both arguments, or nullptr.
    const Piece* piece_containing(double lo_arg, double hi_arg) const;
    /// Piece with lo <= t < hi, or nullptr.
    const Piece* piece_right_of(double t) const;
    /// Piece with lo < t <= hi, or nullptr.
    const Piece* piece_left_of(double t) const;

    struct Classification {
        std::vector<double> idempotent_samples;
        bool satisfies_condition_s = false;
        bool archimedean = false;
    };
    Classification classify() const;

  private:
    std::vector<Piece> pieces_;  // sorted by lo, pairwise disjoint interiors
};

/// Grid report for the quantale axioms (associativity, commutativity,
/// unit, monotonicity, adjointness). Violations are entries, not errors.
struct LawReport {
    int grid_n = 0;
    bool exact = false;
    double max_violation = 0.0;
    struct Entry {
        std::string law;
        double violation = 0.0;
        std::string witness;
    };
    std::vector<Entry> laws;

    bool pass(double eps = kEps) const { return max_violation <= eps; }
    nlohmann::json to_json() const;
};

/// Checks the quantale laws on the grid {0, 1/n, ..., 1}.
/// exact_mode uses rational arithmetic and requires no product piece.
LawReport verify_quantale_laws(const TNorm& t, int grid_n, bool exact_mode = false);

}  // namespace udom

#endif
