#pragma once

// Super semistandard Young tableaux as chains of superpartitions.

#include "sncsym/superpartition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sncsym {

/// First: circles leave a row exactly when its strip row is nonempty.
/// Second: circles may stay or drop straight down (see TableauEnumerator).
/// SecondLoose: the unrestricted stay-or-drop rule; its tableau sums are
/// not symmetric in general and it is kept only for comparison.
enum class TableauKind { First = 1, Second = 2, SecondLoose = 3 };

/// One letter of a weight: a nonnegative value, possibly barred.
struct WeightEntry {
    int value = 0;
    bool barred = false;
    friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

inline std::string to_string(const WeightEntry& w) { return (w.barred ? "~" : "") + std::to_string(w.value); }

inline std::string to_string(const std::vector<WeightEntry>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
    return s + ")";
}

/// The Kostka weight (Ω̄_1,...,Ω̄_m, Ω_{m+1},...,Ω_k).
inline std::vector<WeightEntry> kostka_weight(const Superpartition& omega) {
    std::vector<WeightEntry> w;
    for (int a : omega.antisym()) w.push_back({a, true});
    for (int s : omega.sym()) w.push_back({s, false});
    return w;
}

/// A super Young diagram: row lengths of Λ⁺ and, per row, the id of the
/// circle ending that row (or -1). Circle ids are the steps that created them.
struct SuperDiagramState {
    std::vector<int> rows;
    std::vector<int> circle;

    explicit SuperDiagramState(std::size_t height = 0) : rows(height, 0), circle(height, -1) {}

    int row(std::size_t r) const { return r < rows.size() ? rows[r] : 0; }

    /// Λ^⊕/Λ⁺ is a horizontal and vertical strip: a circle in row r > 0 needs a strictly longer row above.
    bool valid() const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (circle[r] >= 0 && r > 0 && rows[r - 1] <= rows[r]) return false;
        return true;
    }

    int oplus_row(std::size_t r) const { return row(r) + (r < circle.size() && circle[r] >= 0 ? 1 : 0); }

    Superpartition superpartition() const {
        std::vector<int> a, s;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (circle[r] >= 0)
                a.push_back(rows[r]);
            else if (rows[r] > 0)
                s.push_back(rows[r]);
        }
        return Superpartition(std::move(a), std::move(s));
    }

    /// Circle ids read from top to bottom.
    std::vector<int> circle_word() const {
        std::vector<int> w;
        for (int c : circle)
            if (c >= 0) w.push_back(c);
        return w;
    }
};

/// Places Λ into a diagram of the given height; on equal lengths the circled row goes first.
inline SuperDiagramState diagram_of(const Superpartition& s, std::size_t height) {
    struct Row {
        int len;
        bool circled;
    };
    std::vector<Row> rows;
    for (int a : s.antisym()) rows.push_back({a, true});
    for (int v : s.sym()) rows.push_back({v, false});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.len != y.len) return x.len > y.len;
        return x.circled && !y.circled;
    });
    if (rows.size() > height) throw std::invalid_argument("diagram height too small");
    SuperDiagramState d(height);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        d.rows[r] = rows[r].len;
        if (rows[r].circled) d.circle[r] = 0;
    }
    return d;
}

struct SuperTableau {
    TableauKind kind = TableauKind::First;
    std::vector<WeightEntry> weight;
    std::vector<Superpartition> chain;     ///< Λ_(1),...,Λ_(r); Λ_(0) is empty
    std::vector<std::vector<int>> boxes;   ///< step label (1-based) of every box, row by row
    std::vector<int> circle_labels;        ///< labels of the circles, top to bottom
    std::vector<int> circle_rows;          ///< their rows

    long inv() const { return inversions(circle_labels); }

    /// θ indices in product order: top to bottom for the first kind, bottom to top otherwise.
    std::vector<int> theta_word() const {
        std::vector<int> w = circle_labels;
        if (kind != TableauKind::First) std::reverse(w.begin(), w.end());
        return w;
    }

    int sign() const { return sign_of_parity(inversions(theta_word())); }
};

namespace detail {

/// Visits every horizontal strip of the given size added to `rows`, bounded by `cap`.
inline void for_each_horizontal_strip(const std::vector<int>& rows, const std::vector<int>& cap, int size,
                                      const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> next = rows;
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
        if (r == rows.size()) {
            if (left == 0) visit(next);
            return;
        }
        int upper = r == 0 ? rows[0] + left : std::min(rows[r - 1], rows[r] + left);
        upper = std::min(upper, cap[r]);
        for (int v = rows[r]; v <= upper; ++v) {
            next[r] = v;
            rec(r + 1, left - (v - rows[r]));
        }
        next[r] = rows[r];
    };
    rec(0, size);
}

class TableauEnumerator {
public:
    TableauEnumerator(const Superpartition& shape, std::vector<WeightEntry> weight, TableauKind kind)
        : weight_(std::move(weight)), kind_(kind) {
        height_ = static_cast<std::size_t>(shape.length()) + 1;
        target_ = diagram_of(shape, height_);
    }

    std::vector<SuperTableau> run() {
        int total = 0, bars = 0;
        for (const auto& w : weight_) {
            total += w.value;
            bars += w.barred ? 1 : 0;
        }
        int target_total = 0, target_bars = 0;
        for (std::size_t r = 0; r < height_; ++r) {
            target_total += target_.rows[r];
            target_bars += target_.circle[r] >= 0 ? 1 : 0;
        }
        if (total != target_total || bars != target_bars) return {};
        SuperDiagramState start(height_);
        boxes_.assign(height_, {});
        step(0, start);
        return std::move(out_);
    }

private:
    void step(std::size_t i, const SuperDiagramState& cur) {
        if (i == weight_.size()) {
            if (cur.rows != target_.rows) return;
            for (std::size_t r = 0; r < height_; ++r)
                if ((cur.circle[r] >= 0) != (target_.circle[r] >= 0)) return;
            emit(cur);
            return;
        }
        const WeightEntry w = weight_[i];
        const int label = static_cast<int>(i) + 1;
        for_each_horizontal_strip(cur.rows, target_.rows, w.value, [&](const std::vector<int>& next_rows) {
            for_each_circle_move(cur, next_rows, [&](SuperDiagramState moved, const std::vector<bool>& dropped) {
                if (!w.barred) {
                    if (moved.valid() && second_kind_growth_ok(cur, moved, dropped, -1)) descend(i, cur, moved, label);
                    return;
                }
                for (std::size_t r = 0; r < height_; ++r) {
                    if (moved.circle[r] >= 0) continue;
                    SuperDiagramState with = moved;
                    with.circle[r] = label;
                    if (!with.valid() || !new_circle_allowed(cur, with, r)) continue;
                    if (!second_kind_growth_ok(cur, with, dropped, label)) continue;
                    descend(i, cur, with, label);
                }
            });
        });
    }

    /// Old circles: stay when their row of the strip is empty. Otherwise a
    /// first-kind circle drops one row; a second-kind circle stays or drops
    /// straight down into the same column.
    void for_each_circle_move(const SuperDiagramState& cur, const std::vector<int>& next_rows,
                              const std::function<void(SuperDiagramState, const std::vector<bool>&)>& visit) const {
        std::vector<std::size_t> movers;
        SuperDiagramState base(height_);
        base.rows = next_rows;
        for (std::size_t r = 0; r < height_; ++r) {
            if (cur.circle[r] < 0) continue;
            if (next_rows[r] == cur.rows[r])
                base.circle[r] = cur.circle[r];
            else
                movers.push_back(r);
        }
        const std::size_t choices = kind_ == TableauKind::First ? 1 : (std::size_t{1} << movers.size());
        for (std::size_t mask = 0; mask < choices; ++mask) {
            SuperDiagramState s = base;
            std::vector<bool> dropped(height_, false);
            bool ok = true;
            for (std::size_t k = 0; k < movers.size() && ok; ++k) {
                std::size_t r = movers[k];
                bool stay = kind_ != TableauKind::First && ((mask >> k) & 1u);
                std::size_t dest = stay ? r : r + 1;
                if (dest >= height_ || s.circle[dest] >= 0) ok = false;
                else if (!stay && kind_ == TableauKind::Second && next_rows[dest] != cur.rows[r]) ok = false;
                else {
                    s.circle[dest] = cur.circle[r];
                    dropped[dest] = !stay;
                }
            }
            if (ok) visit(std::move(s), dropped);
        }
    }

    /// Second kind: Λ^⊕ grows by a horizontal strip, and a circle that did not
    /// drop into row q ends strictly left of the old end of row q-1.
    bool second_kind_growth_ok(const SuperDiagramState& before, const SuperDiagramState& after,
                               const std::vector<bool>& dropped, int new_label) const {
        if (kind_ != TableauKind::Second) return true;
        for (std::size_t q = 0; q < height_; ++q) {
            if (after.oplus_row(q) < before.oplus_row(q)) return false;
            if (q > 0 && after.oplus_row(q) > before.oplus_row(q - 1)) return false;
            if (q > 0 && after.circle[q] >= 0 && after.circle[q] != new_label && !dropped[q] &&
                after.rows[q] + 1 > before.rows[q - 1])
                return false;
        }
        return true;
    }

    bool new_circle_allowed(const SuperDiagramState& before, const SuperDiagramState& after, std::size_t r) const {
        if (kind_ == TableauKind::First) {
            // first column left uncovered by the + strip
            int c = 1;
            while (true) {
                bool covered = false;
                for (std::size_t q = 0; q < height_; ++q)
                    if (before.row(q) < c && after.row(q) >= c) covered = true;
                if (!covered) break;
                ++c;
            }
            if (after.rows[r] + 1 != c) return false;
            for (std::size_t q = 0; q < r; ++q)
                if (after.rows[q] == c - 1) return false;
            return true;
        }
        // Λ^⊕ grows by a horizontal strip whose rightmost box is the new circle
        int rightmost = 0;
        std::size_t rightmost_row = 0;
        for (std::size_t q = 0; q < height_; ++q) {
            int lo = before.oplus_row(q), hi = after.oplus_row(q);
            if (hi < lo) return false;
            if (q > 0 && hi > before.oplus_row(q - 1)) return false;
            if (hi > lo && hi > rightmost) {
                rightmost = hi;
                rightmost_row = q;
            }
        }
        return rightmost_row == r && rightmost == after.rows[r] + 1;
    }

    void descend(std::size_t i, const SuperDiagramState& cur, const SuperDiagramState& next, int label) {
        std::vector<std::size_t> grown;
        for (std::size_t r = 0; r < height_; ++r)
            for (int c = cur.rows[r]; c < next.rows[r]; ++c) {
                boxes_[r].push_back(label);
                grown.push_back(r);
            }
        chain_.push_back(next.superpartition());
        step(i + 1, next);
        chain_.pop_back();
        for (std::size_t r : grown) boxes_[r].pop_back();
    }

    void emit(const SuperDiagramState& final_state) {
        SuperTableau t;
        t.kind = kind_;
        t.weight = weight_;
        t.chain = chain_;
        for (std::size_t r = 0; r < height_; ++r) {
            if (final_state.rows[r] > 0 || final_state.circle[r] >= 0) t.boxes.push_back(boxes_[r]);
            if (final_state.circle[r] >= 0) {
                t.circle_labels.push_back(final_state.circle[r]);
                t.circle_rows.push_back(static_cast<int>(r));
            }
        }
        out_.push_back(std::move(t));
    }

    std::vector<WeightEntry> weight_;
    TableauKind kind_;
    std::size_t height_ = 0;
    SuperDiagramState target_;
    std::vector<Superpartition> chain_;
    std::vector<std::vector<int>> boxes_;
    std::vector<SuperTableau> out_;
};

}  // namespace detail

/// Every super semistandard Young tableau of the given kind, shape and weight.
inline std::vector<SuperTableau> enumerate_tableaux(const Superpartition& shape, const std::vector<WeightEntry>& weight,
                                                    TableauKind kind) {
    return detail::TableauEnumerator(shape, weight, kind).run();
}

/// K_{Λ,Ω} (first kind) or K̄_{Λ,Ω} (second kind): Σ_T sign(T), the sign of
/// the θ word of T.
inline Integer kostka(const Superpartition& shape, const Superpartition& omega, TableauKind kind) {
    if (shape.degree() != omega.degree() || shape.fermionic_degree() != omega.fermionic_degree()) return 0;
    Integer k = 0;
    for (const auto& t : enumerate_tableaux(shape, kostka_weight(omega), kind)) k += t.sign();
    return k;
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string render_chain(const SuperTableau& t) {
    std::string s = "[]";
    for (const auto& p : t.chain) s += " -> " + to_string(p);
    return s;
}

/// Shape diagram: '#' for boxes, 'O' for circles.
inline std::string render_diagram(const Superpartition& shape) {
    auto d = diagram_of(shape, static_cast<std::size_t>(shape.length()));
    std::string s;
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        std::string line;
        for (int c = 0; c < d.rows[r]; ++c) line += (c ? " #" : "#");
        if (d.circle[r] >= 0) line += line.empty() ? "O" : " O";
        s += line + "\n";
    }
    return s;
}

/// Filled tableau: box labels, circles shown as 'O' followed by their label.
inline std::string render_filling(const SuperTableau& t) {
    std::string s;
    std::size_t next_circle = 0;
    for (std::size_t r = 0; r < t.boxes.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < t.boxes[r].size(); ++c) line += (c ? " " : "") + std::to_string(t.boxes[r][c]);
        if (next_circle < t.circle_rows.size() && t.circle_rows[next_circle] == static_cast<int>(r)) {
            line += (line.empty() ? "O" : " O") + std::to_string(t.circle_labels[next_circle]);
            ++next_circle;
        }
        s += line + "\n";
    }
    return s;
}

}  // namespace sncsym
