#include "uavmot/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavmot::assignment {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Shortest-augmenting-path Hungarian on a square matrix. Maintains dual
/// feasibility u[i] + v[j] <= cost[i][j] with tightness on matched edges,
/// so zero reduced cost identifies every edge usable by an optimal
/// assignment.
void jv_square(int n, const std::vector<double>& cost, std::vector<int>& rowsol,
               std::vector<double>& u, std::vector<double>& v) {
    u.assign(n + 1, 0.0);
    v.assign(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    rowsol.assign(n, -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j]) rowsol[p[j] - 1] = j - 1;
    }
}

/// Kuhn augmenting step over the zero-reduced-cost graph, skipping fixed
/// columns. Used to test whether an alternative tied column stays optimal.
bool augment(int row, const std::vector<std::vector<int>>& zero_adj,
             const std::vector<char>& col_blocked, std::vector<char>& col_visited,
             std::vector<int>& rowsol, std::vector<int>& colsol) {
    for (int j : zero_adj[row]) {
        if (col_blocked[j] || col_visited[j]) continue;
        col_visited[j] = 1;
        if (colsol[j] == -1 ||
            augment(colsol[j], zero_adj, col_blocked, col_visited, rowsol, colsol)) {
            rowsol[row] = j;
            colsol[j] = row;
            return true;
        }
    }
    return false;
}

/// Rewrites rowsol into the lexicographically smallest optimal assignment:
/// rows in order take the lowest tied column that still leaves a perfect
/// matching on the zero-reduced-cost graph.
void lexicographic_refine(int n, const std::vector<double>& cost, std::vector<int>& rowsol,
                          const std::vector<double>& u, const std::vector<double>& v) {
    double maxabs = 0.0;
    for (double c : cost) maxabs = std::max(maxabs, std::fabs(c));
    const double eps = 1e-9 * (1.0 + maxabs);

    std::vector<std::vector<int>> zero_adj(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (cost[i * n + j] - u[i + 1] - v[j + 1] <= eps) zero_adj[i].push_back(j);
        }
    }
    std::vector<int> colsol(n, -1);
    for (int i = 0; i < n; ++i) colsol[rowsol[i]] = i;

    std::vector<char> col_blocked(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j : zero_adj[i]) {
            if (j >= rowsol[i]) break;  // adjacency is ascending
            if (col_blocked[j]) continue;
            // Tentatively move row i to column j and reroute the displaced row.
            const int displaced = colsol[j];
            const int old_col = rowsol[i];
            rowsol[i] = j;
            colsol[j] = i;
            colsol[old_col] = -1;
            if (displaced == -1) break;  // column was free (cannot happen on square, kept for safety)
            std::vector<char> col_visited(n, 0);
            col_visited[j] = 1;
            rowsol[displaced] = -1;
            if (augment(displaced, zero_adj, col_blocked, col_visited, rowsol, colsol)) break;
            // Restore.
            rowsol[displaced] = j;
            colsol[j] = displaced;
            rowsol[i] = old_col;
            colsol[old_col] = i;
        }
        col_blocked[rowsol[i]] = 1;
    }
}

}  // namespace

Assignment solve(const distance::CostMatrix& costs, double match_cost_max) {
    const int rows = static_cast<int>(costs.rows);
    const int cols = static_cast<int>(costs.cols);

    Assignment out;
    if (rows == 0 || cols == 0) {
        for (int i = 0; i < rows; ++i) out.unmatched_tracks.push_back(i);
        for (int j = 0; j < cols; ++j) out.unmatched_detections.push_back(j);
        return out;
    }

    double maxval = 0.0;
    for (double c : costs.values) {
        if (!std::isfinite(c)) throw std::invalid_argument("assignment: non-finite cost");
        maxval = std::max(maxval, c);
    }

    // Pad rectangular inputs square; padded cells cost more than any real
    // cell so they are only used when a side must stay unmatched.
    const int n = std::max(rows, cols);
    const double pad = maxval + 1.0;
    std::vector<double> sq(static_cast<size_t>(n) * n, pad);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) sq[i * n + j] = costs.at(i, j);
    }

    std::vector<int> rowsol;
    std::vector<double> u, v;
    jv_square(n, sq, rowsol, u, v);
    lexicographic_refine(n, sq, rowsol, u, v);

    std::vector<char> det_matched(cols, 0);
    for (int i = 0; i < rows; ++i) {
        const int j = rowsol[i];
        if (j >= cols) continue;  // padded column
        const double c = costs.at(i, j);
        if (c >= match_cost_max) continue;
        out.matches.push_back({i, j, c});
        det_matched[j] = 1;
    }
    std::vector<char> track_matched(rows, 0);
    for (const Match& m : out.matches) track_matched[m.track] = 1;
    for (int i = 0; i < rows; ++i) {
        if (!track_matched[i]) out.unmatched_tracks.push_back(i);
    }
    for (int j = 0; j < cols; ++j) {
        if (!det_matched[j]) out.unmatched_detections.push_back(j);
    }
    return out;
}

}  // namespace uavmot::assignment
