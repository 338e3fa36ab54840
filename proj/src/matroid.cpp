#include "toporep/matroid.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "toporep/error.hpp"
#include "toporep/gfp.hpp"
#include "toporep/solvers.hpp"

namespace toporep {

struct RankOracle::Data {
    Kind kind;
    std::vector<std::string> ids;
    int r = 0;                  // uniform
    ExactMatrix columns;        // linear
    std::vector<gfp::Vec> residue_columns;
    Graph graph;                // transversal
    std::vector<int> side;
};

struct RankOracle::Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<ElementSet, int> table;
};

RankOracle::RankOracle(std::shared_ptr<const Data> data)
    : data_(std::move(data)), memo_(std::make_shared<Memo>()) {}

RankOracle RankOracle::uniform(int m, int r) {
    if (m < 0 || r < 0 || r > m) fail(ErrorKind::invalid_parameter, "uniform matroid needs 0 <= r <= m");
    if (m > kMaxGroundSize) fail(ErrorKind::instance_too_large, "ground set larger than 64 elements");
    auto d = std::make_shared<Data>();
    d->kind = Kind::uniform;
    d->r = r;
    for (int i = 0; i < m; ++i) d->ids.push_back(std::to_string(i));
    return RankOracle(std::move(d));
}

RankOracle RankOracle::linear(ExactMatrix columns) {
    if (columns.cols() > static_cast<std::size_t>(kMaxGroundSize))
        fail(ErrorKind::instance_too_large, "ground set larger than 64 elements");
    auto d = std::make_shared<Data>();
    d->kind = Kind::linear;
    for (std::size_t c = 0; c < columns.cols(); ++c) d->ids.push_back(std::to_string(c));
    if (columns.field().is_prime()) {
        for (std::size_t c = 0; c < columns.cols(); ++c) {
            gfp::Vec v(columns.rows());
            for (std::size_t r = 0; r < columns.rows(); ++r)
                v[r] = static_cast<gfp::Elem>(columns.at(r, c).get_num().get_ui());
            d->residue_columns.push_back(std::move(v));
        }
    }
    d->columns = std::move(columns);
    return RankOracle(std::move(d));
}

RankOracle RankOracle::transversal(Graph b, std::vector<int> side) {
    if (side.size() > static_cast<std::size_t>(kMaxGroundSize))
        fail(ErrorKind::instance_too_large, "ground set larger than 64 elements");
    std::vector<bool> in_side(b.size(), false);
    for (int u : side) {
        if (u < 0 || u >= b.size() || in_side[u])
            fail(ErrorKind::invalid_input, "transversal side must list distinct vertices");
        in_side[u] = true;
    }
    for (auto [u, v] : b.edges())
        if (in_side[u] && in_side[v])
            fail(ErrorKind::invalid_input, "transversal side is not an independent side of the graph");
    auto d = std::make_shared<Data>();
    d->kind = Kind::transversal;
    for (int u : side) d->ids.push_back(b.id(u));
    d->graph = std::move(b);
    d->side = std::move(side);
    return RankOracle(std::move(d));
}

RankOracle::Kind RankOracle::kind() const { return data_->kind; }
int RankOracle::ground_size() const { return static_cast<int>(data_->ids.size()); }
const std::vector<std::string>& RankOracle::ground_ids() const { return data_->ids; }

int RankOracle::element_index(const std::string& id) const {
    auto it = std::find(data_->ids.begin(), data_->ids.end(), id);
    return it == data_->ids.end() ? -1 : static_cast<int>(it - data_->ids.begin());
}

int RankOracle::uniform_rank() const { return data_->r; }
const ExactMatrix& RankOracle::matrix() const { return data_->columns; }
const Graph& RankOracle::bipartite_graph() const { return data_->graph; }
const std::vector<int>& RankOracle::side() const { return data_->side; }

std::size_t RankOracle::memo_size() const {
    std::shared_lock lock(memo_->mutex);
    return memo_->table.size();
}

int RankOracle::compute(ElementSet s) const {
    const auto& d = *data_;
    switch (d.kind) {
        case Kind::uniform:
            return std::min(std::popcount(s), d.r);
        case Kind::linear: {
            if (d.columns.field().is_prime()) {
                gfp::Echelon e(gfp::Field{d.columns.field().characteristic()}, d.columns.rows());
                for (int c : elements_of(s)) e.insert(d.residue_columns[c]);
                return static_cast<int>(e.rank());
            }
            std::vector<std::size_t> cols;
            for (int c : elements_of(s)) cols.push_back(static_cast<std::size_t>(c));
            return static_cast<int>(toporep::rank(d.columns.select_columns(cols)));
        }
        case Kind::transversal: {
            std::vector<int> left;
            for (int c : elements_of(s)) left.push_back(d.side[c]);
            return static_cast<int>(matching_from_side(d.graph, left).size());
        }
    }
    return 0;
}

int RankOracle::rank(ElementSet s) const {
    if (ground_size() < 64 && (s >> ground_size()) != 0)
        fail(ErrorKind::invalid_input, "element set outside the ground set");
    if (s == 0) return 0;
    {
        std::shared_lock lock(memo_->mutex);
        auto it = memo_->table.find(s);
        if (it != memo_->table.end()) return it->second;
    }
    int r = compute(s);
    std::unique_lock lock(memo_->mutex);
    memo_->table.emplace(s, r);
    return r;
}

int RankOracle::rank(const std::vector<int>& elements) const { return rank(element_set(elements)); }

int RankOracle::full_rank() const {
    int m = ground_size();
    return rank(m == 64 ? ~ElementSet{0} : (ElementSet{1} << m) - 1);
}

ElementSet MatroidAssignment::elements_of_vertices(std::uint64_t vertices) const {
    ElementSet s = 0;
    while (vertices) {
        s |= ElementSet{1} << element[std::countr_zero(vertices)];
        vertices &= vertices - 1;
    }
    return s;
}

ElementSet element_set(const std::vector<int>& elements) {
    ElementSet s = 0;
    for (int e : elements) {
        if (e < 0 || e >= kMaxGroundSize) fail(ErrorKind::invalid_input, "element index out of range");
        s |= ElementSet{1} << e;
    }
    return s;
}

std::vector<int> elements_of(ElementSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

ElementSet closure_trace(const RankOracle& m, ElementSet s, ElementSet universe) {
    const int base = m.rank(s);
    ElementSet out = 0;
    for (int e : elements_of(universe))
        if ((s >> e & 1u) || m.rank(s | ElementSet{1} << e) == base) out |= ElementSet{1} << e;
    return out;
}

ElementSet greedy_independent_subset(const RankOracle& m, ElementSet s, int k) {
    if (k < 0) fail(ErrorKind::invalid_parameter, "negative subset size");
    if (m.rank(s) < k) fail(ErrorKind::insufficient_rank, "set rank is below the requested size");
    ElementSet chosen = 0;
    int r = 0;
    for (int e : elements_of(s)) {
        if (r == k) break;
        ElementSet next = chosen | ElementSet{1} << e;
        if (m.rank(next) == r + 1) {
            chosen = next;
            ++r;
        }
    }
    return chosen;
}

int transversal_rank_by_deletion(const Graph& b, const std::vector<int>& side, ElementSet s) {
    std::vector<int> keep, left;
    std::vector<bool> dropped(b.size(), false);
    for (std::size_t i = 0; i < side.size(); ++i)
        if (!(s >> i & 1u)) dropped[side[i]] = true;
    for (int v = 0; v < b.size(); ++v)
        if (!dropped[v]) keep.push_back(v);
    Graph sub = induced_subgraph(b, keep);
    for (std::size_t i = 0; i < side.size(); ++i)
        if (s >> i & 1u) left.push_back(sub.index_of(b.id(side[i])));
    return static_cast<int>(max_bipartite_matching(sub, left).size());
}

}  // namespace toporep
