#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ismkit {

// Why a reachability cell holds the value it does. Zero is the only value
// that renders as "0"; Transitive renders as "1*" so closure-added links
// stay distinguishable from expert-stated ones.
enum class CellOrigin : std::uint8_t {
    Zero,        // no relation
    Diagonal,    // reflexive 1 on the diagonal
    Direct,      // stated in the source matrix
    Transitive,  // added by the transitive closure
};

bool is_one(CellOrigin origin);

// "0", "1" or "1*".
std::string cell_text(CellOrigin origin);

// Parses "0" / "1" / "1*" for a cell at (row, col); diagonal cells must be
// "1". Throws ParseError on anything else.
CellOrigin cell_from_text(const std::string& text, bool diagonal);

// A square boolean matrix over a factor order, with per-cell origins.
// Immutable once built; the pipeline functions return fresh instances.
class ReachabilityMatrix {
public:
    // cells is row-major, n*n entries. Throws ValidationError when the
    // shape is wrong, when a diagonal cell is not Diagonal, or when an
    // off-diagonal cell claims the Diagonal origin.
    ReachabilityMatrix(std::vector<std::string> factor_ids, std::vector<CellOrigin> cells);

    // The identity relation: diagonal ones, zeros elsewhere.
    static ReachabilityMatrix identity(std::vector<std::string> factor_ids);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& factor_ids() const { return ids_; }
    std::optional<std::size_t> index_of(const std::string& id) const;

    bool reaches(std::size_t row, std::size_t col) const {
        return is_one(cells_[row * ids_.size() + col]);
    }
    CellOrigin origin(std::size_t row, std::size_t col) const {
        return cells_[row * ids_.size() + col];
    }

    // Number of 1-cells in the whole matrix (diagonal included).
    std::size_t one_count() const;

    bool operator==(const ReachabilityMatrix&) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<CellOrigin> cells_;
};

} // namespace ismkit
