#include "ismkit/ism.hpp"

#include <algorithm>
#include <cstdint>

#include "ismkit/error.hpp"

namespace ismkit {

namespace {

// Row bitsets over 64-bit words; Warshall's pass is then a handful of
// word-wide ORs per (k, i) pair instead of an inner column loop.
struct BitRows {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(std::size_t n_) : n(n_), words((n_ + 63) / 64), bits(n_ * words, 0) {}

    void set(std::size_t row, std::size_t col) {
        bits[row * words + col / 64] |= std::uint64_t{1} << (col % 64);
    }
    bool test(std::size_t row, std::size_t col) const {
        return (bits[row * words + col / 64] >> (col % 64)) & 1;
    }
    void or_row(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words; ++w)
            bits[dst * words + w] |= bits[src * words + w];
    }
};

BitRows to_bits(const ReachabilityMatrix& matrix) {
    const std::size_t n = matrix.size();
    BitRows rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix.reaches(i, j)) rows.set(i, j);
    return rows;
}

} // namespace

ReachabilityMatrix transitive_closure(const ReachabilityMatrix& matrix) {
    const std::size_t n = matrix.size();
    BitRows rows = to_bits(matrix);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rows.test(i, k)) rows.or_row(i, k);

    std::vector<CellOrigin> cells(n * n, CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows.test(i, j)) continue;
            CellOrigin was = matrix.origin(i, j);
            cells[i * n + j] = is_one(was) ? was : CellOrigin::Transitive;
        }
    }
    return ReachabilityMatrix(matrix.factor_ids(), std::move(cells));
}

std::vector<std::size_t> driving_power(const ReachabilityMatrix& matrix) {
    const std::size_t n = matrix.size();
    std::vector<std::size_t> sums(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix.reaches(i, j)) ++sums[i];
    return sums;
}

std::vector<std::size_t> dependence_power(const ReachabilityMatrix& matrix) {
    const std::size_t n = matrix.size();
    std::vector<std::size_t> sums(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix.reaches(i, j)) ++sums[j];
    return sums;
}

std::vector<std::size_t> dense_ranks(const std::vector<std::size_t>& powers) {
    std::vector<std::size_t> distinct(powers);
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::size_t> ranks(powers.size(), 0);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), powers[i], std::greater<>());
        ranks[i] = static_cast<std::size_t>(it - distinct.begin()) + 1;
    }
    return ranks;
}

PowerProfile power_profile(const ReachabilityMatrix& closed) {
    PowerProfile profile;
    profile.factor_ids = closed.factor_ids();
    profile.driving = driving_power(closed);
    profile.dependence = dependence_power(closed);
    profile.driving_rank = dense_ranks(profile.driving);
    profile.dependence_rank = dense_ranks(profile.dependence);
    return profile;
}

LevelPartition::LevelPartition(std::vector<std::vector<std::string>> levels)
    : levels_(std::move(levels)) {
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].empty())
            throw ValidationError("level partition: level " + std::to_string(i + 1) + " is empty");
}

const std::vector<std::string>& LevelPartition::level(std::size_t level_number) const {
    if (level_number == 0 || level_number > levels_.size())
        throw ValidationError("level partition: no level " + std::to_string(level_number));
    return levels_[level_number - 1];
}

std::optional<std::size_t> LevelPartition::level_of(const std::string& id) const {
    for (std::size_t i = 0; i < levels_.size(); ++i)
        for (const auto& member : levels_[i])
            if (member == id) return i + 1;
    return std::nullopt;
}

std::size_t LevelPartition::factor_count() const {
    std::size_t count = 0;
    for (const auto& level : levels_)
        count += level.size();
    return count;
}

LevelPartition partition_levels(const ReachabilityMatrix& closed) {
    const std::size_t n = closed.size();
    BitRows reach = to_bits(closed);
    BitRows antecedent(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (reach.test(i, j)) antecedent.set(j, i);

    std::vector<bool> remaining(n, true);
    std::size_t left = n;
    std::vector<std::vector<std::string>> levels;

    while (left > 0) {
        std::vector<std::size_t> extracted;
        for (std::size_t i = 0; i < n; ++i) {
            if (!remaining[i]) continue;
            // Reachability restricted to the remaining factors must sit
            // inside the antecedent set: everything i still reaches must
            // also reach i back.
            bool top = true;
            for (std::size_t j = 0; j < n && top; ++j)
                if (remaining[j] && reach.test(i, j) && !antecedent.test(i, j))
                    top = false;
            if (top) extracted.push_back(i);
        }
        if (extracted.empty())
            throw ValidationError(
                "level partition: no factor qualifies for level " +
                std::to_string(levels.size() + 1) +
                "; the matrix is not a transitive closure");

        std::vector<std::string> level;
        level.reserve(extracted.size());
        for (std::size_t i : extracted) {
            level.push_back(closed.factor_ids()[i]);
            remaining[i] = false;
        }
        left -= extracted.size();
        levels.push_back(std::move(level));
    }
    return LevelPartition(std::move(levels));
}

ReachabilityMatrix conical_matrix(const ReachabilityMatrix& closed,
                                  const LevelPartition& partition) {
    const std::size_t n = closed.size();
    if (partition.factor_count() != n)
        throw ValidationError("conical matrix: partition covers " +
                              std::to_string(partition.factor_count()) + " factors, matrix has " +
                              std::to_string(n));

    std::vector<std::size_t> order;
    order.reserve(n);
    for (const auto& level : partition.levels()) {
        for (const auto& id : level) {
            auto index = closed.index_of(id);
            if (!index)
                throw ValidationError("conical matrix: partition id \"" + id +
                                      "\" is not in the matrix");
            order.push_back(*index);
        }
    }

    std::vector<std::string> ids;
    ids.reserve(n);
    std::vector<CellOrigin> cells(n * n, CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i)
        ids.push_back(closed.factor_ids()[order[i]]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cells[i * n + j] = closed.origin(order[i], order[j]);
    return ReachabilityMatrix(std::move(ids), std::move(cells));
}

Digraph build_digraph(const ReachabilityMatrix& initial, const ReachabilityMatrix& closed,
                      const LevelPartition& partition) {
    const std::size_t n = initial.size();
    if (initial.factor_ids() != closed.factor_ids())
        throw ValidationError("digraph: initial and closed matrices disagree on factors");
    {
        ReachabilityMatrix check = transitive_closure(initial);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (check.reaches(i, j) != closed.reaches(i, j))
                    throw ValidationError("digraph: closed matrix is not the closure of the "
                                          "initial one (cell " + initial.factor_ids()[i] + "," +
                                          initial.factor_ids()[j] + ")");
    }

    // Start from the expert-stated edges and drop everything a two-step
    // path through surviving edges already explains. Scanning row-major
    // and testing against the live edge set keeps this deterministic.
    std::vector<bool> alive(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && initial.reaches(i, j)) alive[i * n + j] = true;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!alive[i * n + j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (alive[i * n + k] && alive[k * n + j]) {
                    alive[i * n + j] = false;
                    break;
                }
            }
        }
    }

    Digraph graph;
    graph.node_ids = initial.factor_ids();
    graph.node_levels.reserve(n);
    for (const auto& id : graph.node_ids) {
        auto level = partition.level_of(id);
        if (!level)
            throw ValidationError("digraph: factor \"" + id + "\" is missing from the partition");
        graph.node_levels.push_back(*level);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (alive[i * n + j])
                graph.edges.push_back({graph.node_ids[i], graph.node_ids[j]});
    return graph;
}

IsmReport run_ism(const SsimMatrix& ssim) {
    ReachabilityMatrix initial = to_initial_reachability(ssim);
    ReachabilityMatrix closed = transitive_closure(initial);
    PowerProfile powers = power_profile(closed);
    LevelPartition levels = partition_levels(closed);
    ReachabilityMatrix conical = conical_matrix(closed, levels);
    Digraph digraph = build_digraph(initial, closed, levels);
    return IsmReport{std::move(initial), std::move(closed),    std::move(powers),
                     std::move(levels),  std::move(conical),   std::move(digraph)};
}

} // namespace ismkit
