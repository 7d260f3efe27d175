#include "ismkit/reachability.hpp"

#include <unordered_set>

#include "ismkit/error.hpp"

namespace ismkit {

bool is_one(CellOrigin origin) {
    return origin != CellOrigin::Zero;
}

std::string cell_text(CellOrigin origin) {
    switch (origin) {
    case CellOrigin::Zero: return "0";
    case CellOrigin::Transitive: return "1*";
    case CellOrigin::Diagonal:
    case CellOrigin::Direct: return "1";
    }
    return "?";
}

CellOrigin cell_from_text(const std::string& text, bool diagonal) {
    if (diagonal) {
        if (text == "1") return CellOrigin::Diagonal;
        throw ParseError("matrix cell: diagonal must be \"1\", got \"" + text + "\"");
    }
    if (text == "0") return CellOrigin::Zero;
    if (text == "1") return CellOrigin::Direct;
    if (text == "1*") return CellOrigin::Transitive;
    throw ParseError("matrix cell: expected \"0\", \"1\" or \"1*\", got \"" + text + "\"");
}

ReachabilityMatrix::ReachabilityMatrix(std::vector<std::string> factor_ids,
                                       std::vector<CellOrigin> cells)
    : ids_(std::move(factor_ids)), cells_(std::move(cells)) {
    const std::size_t n = ids_.size();
    if (n == 0)
        throw ValidationError("reachability matrix: no factors");
    if (cells_.size() != n * n)
        throw ValidationError("reachability matrix: expected " + std::to_string(n * n) +
                              " cells for " + std::to_string(n) + " factors, got " +
                              std::to_string(cells_.size()));

    std::unordered_set<std::string> seen;
    for (const auto& id : ids_) {
        if (id.empty())
            throw ValidationError("reachability matrix: empty factor id");
        if (!seen.insert(id).second)
            throw ValidationError("reachability matrix: duplicate factor id \"" + id + "\"");
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            CellOrigin c = cells_[i * n + j];
            if (i == j && c != CellOrigin::Diagonal)
                throw ValidationError("reachability matrix: diagonal cell (" + ids_[i] + "," +
                                      ids_[i] + ") must be a reflexive 1");
            if (i != j && c == CellOrigin::Diagonal)
                throw ValidationError("reachability matrix: off-diagonal cell (" + ids_[i] + "," +
                                      ids_[j] + ") claims the diagonal origin");
        }
    }
}

ReachabilityMatrix ReachabilityMatrix::identity(std::vector<std::string> factor_ids) {
    const std::size_t n = factor_ids.size();
    std::vector<CellOrigin> cells(n * n, CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i)
        cells[i * n + i] = CellOrigin::Diagonal;
    return ReachabilityMatrix(std::move(factor_ids), std::move(cells));
}

std::optional<std::size_t> ReachabilityMatrix::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id) return i;
    return std::nullopt;
}

std::size_t ReachabilityMatrix::one_count() const {
    std::size_t count = 0;
    for (CellOrigin c : cells_)
        if (is_one(c)) ++count;
    return count;
}

} // namespace ismkit
