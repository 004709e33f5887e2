#include "annihil/annihilated.hpp"

#include "annihil/basis.hpp"
#include "annihil/element_io.hpp"
#include "annihil/steenrod.hpp"

#include <json.hpp>

#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace annihil {

namespace {

SubspaceBasis common_kernel(int s, int d, const std::vector<int>& squares)
{
    const Bidegree ambient{s, d};
    std::vector<MatrixGF2> blocks;
    for (int k : squares)
        blocks.push_back(sq_matrix(s, d, k));
    if (blocks.empty())
        return SubspaceBasis::whole(ambient);
    return SubspaceBasis::from_rows(ambient, kernel(stack(blocks)));
}

}  // namespace

SubspaceBasis delta_basis(int k, int s, int d)
{
    if (k < 0)
        throw std::invalid_argument("delta_basis: level must be nonnegative");
    std::vector<int> squares;
    for (int i = 0; i <= k && 2 * (1 << i) <= d; ++i)
        squares.push_back(1 << i);
    return common_kernel(s, d, squares);
}

SubspaceBasis image_sq1_basis(int s, int d)
{
    if (s < 1)
        throw std::invalid_argument("image_sq1_basis: length must be at least 1");
    // Columns of the matrix are the images of the source basis.
    return SubspaceBasis::from_rows({s, d}, sq_matrix(s, d + 1, 1).transpose());
}

SubspaceBasis annihilated_by_all_squares(int s, int d)
{
    std::vector<int> squares;
    for (int j = 1; 2 * j <= d; ++j)
        squares.push_back(j);
    return common_kernel(s, d, squares);
}

SubspaceBasis annihilated_by_power_squares(int s, int d)
{
    std::vector<int> squares;
    for (int j = 1; 2 * j <= d; j *= 2)
        squares.push_back(j);
    return common_kernel(s, d, squares);
}

SubspaceBasis full_annihilated_basis(int s, int d)
{
    SubspaceBasis all = annihilated_by_all_squares(s, d);
    if (all != annihilated_by_power_squares(s, d))
        throw std::logic_error("full_annihilated_basis: Sq^j and Sq^{2^i} kernels disagree at (" + std::to_string(s) +
                               "," + std::to_string(d) + ")");
    return all;
}

int stable_level(int d)
{
    int k = 0;
    while (d >= (1 << (k + 2)))
        ++k;
    return k;
}

/******** BasisCache ********/

BasisCache::BasisCache(std::optional<std::filesystem::path> directory) : dir_(std::move(directory))
{
    if (dir_)
        std::filesystem::create_directories(*dir_);
}

std::filesystem::path BasisCache::file_name(int k, int s, int d)
{
    return "delta_k" + std::to_string(k) + "_s" + std::to_string(s) + "_d" + std::to_string(d) + ".json";
}

void BasisCache::write_file(const std::filesystem::path& directory, int k, const SubspaceBasis& basis)
{
    const Bidegree at = basis.ambient();
    nlohmann::json doc;
    doc["version"] = kFormatVersion;
    doc["k"] = k;
    doc["s"] = at.s;
    doc["d"] = at.d;
    doc["basis"] = nlohmann::json::array();
    for (const auto& v : basis.vectors())
        doc["basis"].push_back(to_string(v));

    // Write then rename so concurrent readers never see a partial document.
    const auto target = directory / file_name(k, at.s, at.d);
    auto temp = target;
    temp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(temp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + temp.string());
        out << doc.dump() << '\n';
    }
    std::filesystem::rename(temp, target);
}

std::optional<SubspaceBasis> BasisCache::read_file(const std::filesystem::path& directory, int k, int s, int d)
{
    std::ifstream in(directory / file_name(k, s, d));
    if (!in)
        return std::nullopt;
    try {
        auto doc = nlohmann::json::parse(in);
        if (doc.at("version").get<int>() != kFormatVersion || doc.at("k").get<int>() != k ||
            doc.at("s").get<int>() != s || doc.at("d").get<int>() != d)
            return std::nullopt;
        std::vector<Element> vectors;
        for (const auto& text : doc.at("basis"))
            vectors.push_back(parse_element(text.get<std::string>()));
        return SubspaceBasis::span_of({s, d}, vectors);
    }
    catch (const std::exception&) {
        return std::nullopt;
    }
}

SubspaceBasis BasisCache::delta(int k, int s, int d)
{
    const Key key{k, s, d};
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }

    std::optional<SubspaceBasis> basis;
    if (dir_)
        basis = read_file(*dir_, k, s, d);
    if (!basis) {
        basis = delta_basis(k, s, d);
        if (dir_)
            write_file(*dir_, k, *basis);
    }

    std::unique_lock lock(mutex_);
    return memo_.try_emplace(key, std::move(*basis)).first->second;
}

}  // namespace annihil
