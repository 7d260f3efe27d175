#include "ismkit/ssim.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "ismkit/error.hpp"
#include "ismkit/factor.hpp"

namespace ismkit {

char to_char(RelationSymbol s) {
    return static_cast<char>(s);
}

namespace {

std::size_t upper_index(std::size_t n, std::size_t row, std::size_t col) {
    // row < col. Cells are packed row-major over the strict upper triangle.
    return row * (2 * n - row - 1) / 2 + (col - row - 1);
}

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ','))
        cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',')
        cells.push_back("");
    return cells;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::stringstream stream(text);
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty())
        lines.pop_back();
    return lines;
}

std::optional<RelationSymbol> parse_symbol_cell(const std::string& raw, const std::string& row_id,
                                                const std::string& col_id) {
    if (raw.empty())
        return std::nullopt;
    if (raw.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(raw[0]))) {
        case 'V': return RelationSymbol::V;
        case 'A': return RelationSymbol::A;
        case 'X': return RelationSymbol::X;
        case 'O': return RelationSymbol::O;
        default: break;
        }
    }
    throw ParseError("ssim: row " + row_id + ", column " + col_id + ": illegal symbol \"" + raw +
                     "\" (expected V, A, X or O)");
}

struct ParsedGrid {
    std::vector<std::string> ids;
    std::vector<std::optional<RelationSymbol>> cells;
};

ParsedGrid parse_grid(const std::string& csv_text, const FactorCatalog* catalog) {
    std::vector<std::string> lines = split_lines(csv_text);
    if (lines.empty())
        throw ParseError("ssim: empty document");

    std::vector<std::string> header = split_csv_line(lines[0]);
    if (!header.empty() && header[0].empty())
        header.erase(header.begin());
    if (header.empty())
        throw ParseError("ssim: header row has no factor ids");

    std::unordered_set<std::string> seen;
    for (const auto& id : header) {
        if (id.empty())
            throw ParseError("ssim: empty factor id in header");
        if (!seen.insert(id).second)
            throw ParseError("ssim: duplicate factor id \"" + id + "\" in header");
    }
    if (catalog) {
        for (const auto& id : header)
            if (!catalog->contains(id))
                throw ValidationError("ssim: factor id \"" + id + "\" is not in the catalog");
    }

    const std::size_t n = header.size();
    // The final factor has no upper-triangle cells, so its row may be left out.
    const std::size_t body = lines.size() - 1;
    if (body != n && body != n - 1)
        throw ParseError("ssim: expected " + std::to_string(n) + " matrix rows, got " +
                         std::to_string(body));

    ParsedGrid grid;
    grid.ids = header;
    grid.cells.assign(n * (n - 1) / 2, std::nullopt);

    for (std::size_t k = 0; k < body; ++k) {
        std::vector<std::string> cells = split_csv_line(lines[k + 1]);
        if (cells.empty() || cells[0] != header[k])
            throw ParseError("ssim: row " + std::to_string(k + 2) + ": expected id \"" + header[k] +
                             "\", got \"" + (cells.empty() ? "" : cells[0]) + "\"");

        const std::size_t upper = n - 1 - k;
        std::size_t first_upper;  // index into cells of column k+1
        if (cells.size() == n + 1) {
            first_upper = k + 2;
            for (std::size_t j = 1; j < first_upper; ++j) {
                if (!cells[j].empty() && cells[j] != "*")
                    throw ParseError("ssim: row " + header[k] + ", column " + header[j - 1] +
                                     ": diagonal and lower-triangle cells must be blank or \"*\"");
            }
        } else if (cells.size() == upper + 1) {
            first_upper = 1;
        } else {
            throw ParseError("ssim: row " + header[k] + ": expected " + std::to_string(n) + " or " +
                             std::to_string(upper) + " cells after the id, got " +
                             std::to_string(cells.size() - 1));
        }

        for (std::size_t j = 0; j < upper; ++j) {
            const std::size_t col = k + 1 + j;
            grid.cells[upper_index(n, k, col)] =
                parse_symbol_cell(cells[first_upper + j], header[k], header[col]);
        }
    }
    return grid;
}

} // namespace

SsimMatrix::SsimMatrix(std::vector<std::string> factor_ids, std::vector<RelationSymbol> cells)
    : ids_(std::move(factor_ids)), cells_(std::move(cells)) {
    const std::size_t n = ids_.size();
    if (n == 0)
        throw ValidationError("ssim: no factors");
    if (cells_.size() != n * (n - 1) / 2)
        throw ValidationError("ssim: expected " + std::to_string(n * (n - 1) / 2) +
                              " pair cells for " + std::to_string(n) + " factors, got " +
                              std::to_string(cells_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& id : ids_) {
        if (id.empty())
            throw ValidationError("ssim: empty factor id");
        if (!seen.insert(id).second)
            throw ValidationError("ssim: duplicate factor id \"" + id + "\"");
    }
}

RelationSymbol SsimMatrix::symbol(std::size_t row, std::size_t col) const {
    return cells_[upper_index(ids_.size(), row, col)];
}

SsimDraft::SsimDraft(std::vector<std::string> factor_ids)
    : SsimDraft(std::move(factor_ids), {}) {}

SsimDraft::SsimDraft(std::vector<std::string> factor_ids,
                     std::vector<std::optional<RelationSymbol>> cells)
    : ids_(std::move(factor_ids)), cells_(std::move(cells)) {
    const std::size_t n = ids_.size();
    if (n == 0)
        throw ValidationError("ssim: no factors");
    const std::size_t expected = n * (n - 1) / 2;
    if (cells_.empty())
        cells_.assign(expected, std::nullopt);
    if (cells_.size() != expected)
        throw ValidationError("ssim: expected " + std::to_string(expected) + " pair cells for " +
                              std::to_string(n) + " factors, got " + std::to_string(cells_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& id : ids_) {
        if (id.empty())
            throw ValidationError("ssim: empty factor id");
        if (!seen.insert(id).second)
            throw ValidationError("ssim: duplicate factor id \"" + id + "\"");
    }
}

std::size_t SsimDraft::answered_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(),
                      [](const std::optional<RelationSymbol>& c) { return c.has_value(); }));
}

std::optional<RelationSymbol> SsimDraft::symbol(std::size_t row, std::size_t col) const {
    return cells_[upper_index(ids_.size(), row, col)];
}

void SsimDraft::set_symbol(std::size_t row, std::size_t col, RelationSymbol s) {
    cells_[upper_index(ids_.size(), row, col)] = s;
}

SsimMatrix SsimDraft::to_matrix() const {
    std::vector<RelationSymbol> cells;
    cells.reserve(cells_.size());
    for (auto [row, col] : elicit_pairs(ids_.size())) {
        const auto& cell = cells_[upper_index(ids_.size(), row, col)];
        if (!cell)
            throw ValidationError("ssim: pair (" + ids_[row] + "," + ids_[col] +
                                  ") has no judgment yet");
        cells.push_back(*cell);
    }
    return SsimMatrix(ids_, std::move(cells));
}

std::vector<std::pair<std::size_t, std::size_t>> elicit_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

SsimMatrix parse_ssim(const std::string& csv_text, const FactorCatalog* catalog) {
    ParsedGrid grid = parse_grid(csv_text, catalog);
    const std::size_t n = grid.ids.size();
    std::vector<RelationSymbol> cells;
    cells.reserve(grid.cells.size());
    for (auto [row, col] : elicit_pairs(n)) {
        const auto& cell = grid.cells[upper_index(n, row, col)];
        if (!cell)
            throw ParseError("ssim: missing symbol for pair (" + grid.ids[row] + "," +
                             grid.ids[col] + ")");
        cells.push_back(*cell);
    }
    return SsimMatrix(std::move(grid.ids), std::move(cells));
}

SsimDraft parse_ssim_draft(const std::string& csv_text, const FactorCatalog* catalog) {
    ParsedGrid grid = parse_grid(csv_text, catalog);
    return SsimDraft(std::move(grid.ids), std::move(grid.cells));
}

namespace {

template <typename CellText>
std::string serialize_grid(const std::vector<std::string>& ids, CellText cell_text_at) {
    std::string out;
    for (const auto& id : ids) {
        out += ',';
        out += id;
    }
    out += '\n';
    const std::size_t n = ids.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += ids[i];
        for (std::size_t j = 0; j < n; ++j) {
            out += ',';
            if (j <= i)
                out += '*';
            else
                out += cell_text_at(i, j);
        }
        out += '\n';
    }
    return out;
}

} // namespace

std::string serialize_ssim(const SsimMatrix& matrix) {
    return serialize_grid(matrix.factor_ids(), [&](std::size_t i, std::size_t j) {
        return std::string(1, to_char(matrix.symbol(i, j)));
    });
}

std::string serialize_ssim(const SsimDraft& draft) {
    return serialize_grid(draft.factor_ids(), [&](std::size_t i, std::size_t j) {
        auto cell = draft.symbol(i, j);
        return cell ? std::string(1, to_char(*cell)) : std::string();
    });
}

ReachabilityMatrix to_initial_reachability(const SsimMatrix& matrix) {
    const std::size_t n = matrix.size();
    std::vector<CellOrigin> cells(n * n, CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i)
        cells[i * n + i] = CellOrigin::Diagonal;
    for (auto [i, j] : elicit_pairs(n)) {
        switch (matrix.symbol(i, j)) {
        case RelationSymbol::V:
            cells[i * n + j] = CellOrigin::Direct;
            break;
        case RelationSymbol::A:
            cells[j * n + i] = CellOrigin::Direct;
            break;
        case RelationSymbol::X:
            cells[i * n + j] = CellOrigin::Direct;
            cells[j * n + i] = CellOrigin::Direct;
            break;
        case RelationSymbol::O:
            break;
        }
    }
    return ReachabilityMatrix(matrix.factor_ids(), std::move(cells));
}

} // namespace ismkit
