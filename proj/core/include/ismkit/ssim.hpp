#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ismkit/reachability.hpp"

namespace ismkit {

class FactorCatalog;

// Expert judgment for an ordered pair (row factor m, column factor n), m < n:
//   V: m influences n        A: n influences m
//   X: both directions       O: no relation
enum class RelationSymbol : char { V = 'V', A = 'A', X = 'X', O = 'O' };

char to_char(RelationSymbol s);

// A completed structural self-interaction matrix: one symbol per unordered
// factor pair, stored for the upper triangle of the id order.
class SsimMatrix {
public:
    // cells holds n*(n-1)/2 symbols in row-major upper-triangle order:
    // (0,1), (0,2), ..., (0,n-1), (1,2), ...
    SsimMatrix(std::vector<std::string> factor_ids, std::vector<RelationSymbol> cells);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& factor_ids() const { return ids_; }
    std::size_t pair_count() const { return cells_.size(); }

    // Requires row < col.
    RelationSymbol symbol(std::size_t row, std::size_t col) const;

    bool operator==(const SsimMatrix&) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<RelationSymbol> cells_;
};

// A matrix under construction: the same storage but any cell may still be
// unanswered. Produced by the elicitation flow and by parsing a partial file.
class SsimDraft {
public:
    explicit SsimDraft(std::vector<std::string> factor_ids);
    SsimDraft(std::vector<std::string> factor_ids,
              std::vector<std::optional<RelationSymbol>> cells);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& factor_ids() const { return ids_; }
    std::size_t pair_count() const { return cells_.size(); }
    std::size_t answered_count() const;
    bool complete() const { return answered_count() == cells_.size(); }

    std::optional<RelationSymbol> symbol(std::size_t row, std::size_t col) const;
    void set_symbol(std::size_t row, std::size_t col, RelationSymbol s);

    // Throws ValidationError if any cell is unanswered.
    SsimMatrix to_matrix() const;

    bool operator==(const SsimDraft&) const = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::optional<RelationSymbol>> cells_;
};

// All unordered pairs in elicitation order: (0,1), (0,2), ..., (1,2), ...
std::vector<std::pair<std::size_t, std::size_t>> elicit_pairs(std::size_t n);

// CSV layout, canonical serialized form:
//   first row    ,P1,P2,...   (leading empty cell, then the ids)
//   row for P1   P1,*,V,O,... ('*' on the diagonal and lower triangle)
// The parser also accepts ragged rows that carry only the upper-triangle
// cells, and is case-insensitive about the symbols. With a catalog given,
// every id must exist in it (ValidationError otherwise).
SsimMatrix parse_ssim(const std::string& csv_text, const FactorCatalog* catalog = nullptr);

// Same grammar, but blank upper-triangle cells mean "not answered yet".
SsimDraft parse_ssim_draft(const std::string& csv_text, const FactorCatalog* catalog = nullptr);

std::string serialize_ssim(const SsimMatrix& matrix);
std::string serialize_ssim(const SsimDraft& draft);

// Builds the initial reachability matrix:
//   V at (m,n) sets cell (m,n); A sets (n,m); X sets both; O neither.
// Every diagonal cell is 1. Off-diagonal ones carry the Direct origin.
ReachabilityMatrix to_initial_reachability(const SsimMatrix& matrix);

} // namespace ismkit
