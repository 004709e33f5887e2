#include "annihil/freeness.hpp"

#include "annihil/basis.hpp"
#include "annihil/parallel.hpp"

#include <stdexcept>

namespace annihil {

std::vector<Element> decomposable_products(int k, int s, int d, BasisCache& cache)
{
    std::vector<Element> products;
    for (int r = 1; r < s; ++r)
        for (int a = 1; a < d; ++a) {
            const SubspaceBasis left = cache.delta(k, r, a);
            if (left.dimension() == 0)
                continue;
            const SubspaceBasis right = cache.delta(k, s - r, d - a);
            if (right.dimension() == 0)
                continue;
            const auto xs = left.vectors();
            const auto ys = right.vectors();
            for (const auto& x : xs)
                for (const auto& y : ys)
                    products.push_back(x * y);
        }
    return products;
}

SubspaceBasis decomposables(int k, int s, int d, BasisCache& cache)
{
    const Bidegree at{s, d};
    EchelonBuilder builder(basis_dimension(s, d));
    for (const auto& p : decomposable_products(k, s, d, cache)) {
        if (builder.full())
            break;
        builder.insert(coordinates(p, at));
    }
    return SubspaceBasis::from_rows(at, builder.reduced());
}

/******** GeneratorTable ********/

const std::vector<Element>& GeneratorTable::at(int s, int d) const
{
    static const std::vector<Element> empty;
    auto it = entries_.find({s, d});
    return it == entries_.end() ? empty : it->second;
}

void GeneratorTable::set(int s, int d, std::vector<Element> representatives)
{
    if (representatives.empty())
        entries_.erase({s, d});
    else
        entries_[{s, d}] = std::move(representatives);
}

HilbertTable GeneratorTable::counts() const
{
    HilbertTable t(s_max_, d_max_);
    for (const auto& [at, reps] : entries_)
        if (t.in_range(at.s, at.d))
            t.set(at.s, at.d, reps.size());
    return t;
}

namespace {

struct CellData
{
    int s = 0;
    int d = 0;
    std::size_t dim = 0;
    std::size_t dec = 0;
    std::vector<Element> generators;
};

std::vector<CellData> compute_cells(int k, int s_max, int d_max, BasisCache& cache)
{
    std::vector<CellData> cells;
    for (int s = 0; s <= s_max; ++s)
        for (int d = 0; d <= d_max; ++d)
            cells.push_back(CellData{.s = s, .d = d, .dim = 0, .dec = 0, .generators = {}});
    // Cells only share the memoized Delta(k) bases, so any schedule gives
    // the same result.
    parallel_for(cells.size(), [&](std::size_t i) {
        CellData& cell = cells[i];
        const SubspaceBasis whole = cache.delta(k, cell.s, cell.d);
        cell.dim = whole.dimension();
        if (cell.s == 0)
            return;  // the unit is not a generator
        const SubspaceBasis dec = decomposables(k, cell.s, cell.d, cache);
        cell.dec = dec.dimension();
        cell.generators = complement_in(whole, dec).vectors();
    });
    return cells;
}

}  // namespace

GeneratorTable minimal_generators(int k, int s_max, int d_max, BasisCache& cache)
{
    GeneratorTable table(k, s_max, d_max);
    for (auto& cell : compute_cells(k, s_max, d_max, cache))
        table.set(cell.s, cell.d, std::move(cell.generators));
    return table;
}

HilbertTable hilbert_inversion(const HilbertTable& g)
{
    if (g.at(0, 0) != 0)
        throw std::invalid_argument("hilbert_inversion: the unit bidegree cannot carry generators");
    HilbertTable f(g.s_max(), g.d_max());
    f.set(0, 0, 1);
    for (int s = 0; s <= g.s_max(); ++s)
        for (int d = 0; d <= g.d_max(); ++d) {
            if (s == 0 && d == 0)
                continue;
            std::uint64_t total = 0;
            for (int r = 0; r <= s; ++r)
                for (int a = 0; a <= d; ++a) {
                    if (r == 0 && a == 0)
                        continue;
                    if (std::uint64_t gen = g.at(r, a))
                        total = checked_add(total, checked_mul(gen, f.at(s - r, d - a)));
                }
            f.set(s, d, total);
        }
    return f;
}

/******** Reports ********/

bool FreenessReport::passed() const
{
    return !first_failure().has_value();
}

std::optional<FreenessCell> FreenessReport::first_failure() const
{
    for (const auto& c : cells)
        if (!c.pass)
            return c;
    return std::nullopt;
}

FreenessReport compare_with_free(int k, const HilbertTable& dims, const HilbertTable& dec, const HilbertTable& g)
{
    if (dims.s_max() != g.s_max() || dims.d_max() != g.d_max() || dec.s_max() != g.s_max() ||
        dec.d_max() != g.d_max())
        throw std::invalid_argument("compare_with_free: tables have different bounds");
    const HilbertTable f = hilbert_inversion(g);
    FreenessReport report{k, g.s_max(), g.d_max(), {}};
    for (int s = 0; s <= g.s_max(); ++s)
        for (int d = 0; d <= g.d_max(); ++d) {
            FreenessCell cell{s, d, dims.at(s, d), dec.at(s, d), g.at(s, d), f.at(s, d), false};
            cell.pass = cell.f == cell.dim;
            report.cells.push_back(cell);
        }
    return report;
}

FreenessReport certify_free(int k, int s_max, int d_max, BasisCache& cache)
{
    HilbertTable dims(s_max, d_max), dec(s_max, d_max), g(s_max, d_max);
    for (const auto& cell : compute_cells(k, s_max, d_max, cache)) {
        dims.set(cell.s, cell.d, cell.dim);
        dec.set(cell.s, cell.d, cell.dec);
        g.set(cell.s, cell.d, cell.generators.size());
    }
    return compare_with_free(k, dims, dec, g);
}

nlohmann::json to_json(const FreenessReport& report)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : report.cells)
        cells.push_back({{"s", c.s}, {"d", c.d}, {"dim", c.dim}, {"dec", c.dec}, {"g", c.g}, {"f", c.f}, {"pass", c.pass}});
    return {{"k", report.k}, {"bounds", {{"s_max", report.s_max}, {"d_max", report.d_max}}}, {"cells", cells}};
}

}  // namespace annihil
