#pragma once

/**
 * @file memo_cache.hpp
 * @brief Sidecar persistence for CountingContext memo tables.
 *
 * One file per alphabet inside a cache directory, one "n<TAB>count" record
 * per line, sorted by n.
 */

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nsbin/counting.hpp"
#include "nsbin/errors.hpp"

namespace nsbin {

inline std::filesystem::path memo_cache_file(const std::filesystem::path& directory,
                                             const DigitSet& alphabet)
{
    std::string name = "A_" + alphabet.to_string();
    std::replace(name.begin(), name.end(), ',', '_');
    return directory / (name + ".tsv");
}

/// Returns the number of records loaded; a missing file loads nothing.
inline std::size_t load_memo(CountingContext& ctx, const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        return 0;
    std::size_t loaded = 0;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty())
            continue;
        const auto tab = line.find('\t');
        try {
            if (tab == std::string::npos)
                throw Error(ErrorKind::InvalidSyntax, "missing tab");
            const BigInt n = detail::parse_big_integer(line.substr(0, tab));
            const BigInt value = detail::parse_big_integer(line.substr(tab + 1));
            if (n < 0 || n > std::numeric_limits<std::int64_t>::max())
                throw Error(ErrorKind::InvalidSyntax, "argument out of range");
            ctx.seed(n.convert_to<std::int64_t>(), value);
        } catch (const Error& e) {
            throw Error(ErrorKind::InvalidSyntax, file.string() + ":" + std::to_string(line_number) +
                                                      ": bad memo record (" + e.what() + ")");
        }
        ++loaded;
    }
    return loaded;
}

inline void save_memo(const CountingContext& ctx, const std::filesystem::path& file)
{
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    std::vector<std::int64_t> keys;
    keys.reserve(ctx.memo().size());
    for (const auto& [n, value] : ctx.memo())
        keys.push_back(n);
    std::sort(keys.begin(), keys.end());

    std::ofstream out(file, std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::InvalidArgument, "cannot write memo cache " + file.string());
    for (std::int64_t n : keys)
        out << n << '\t' << ctx.memo().at(n) << '\n';
}

} // namespace nsbin
