#include "hhodge/cache.hpp"

#include <fstream>
#include <sstream>

#include "hhodge/error.hpp"

namespace hhodge {

namespace {

constexpr std::string_view kMagic = "hhodge-cache v1 ";

}  // namespace

CacheFile CacheFile::parse(std::string_view text)
{
    CacheFile cache;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line.rfind(kMagic, 0) != 0) throw ParseError("missing cache header", 1);
    ++line_no;
    cache.fingerprint = line.substr(kMagic.size());
    if (cache.fingerprint.size() != 16) throw ParseError("malformed group fingerprint in cache header", 1);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("cache entry without a tab", line_no);
        const std::string value = line.substr(tab + 1);
        if (value.find('/') == std::string::npos) throw ParseError("cache value is not p/q", line_no);
        try {
            cache.entries.emplace_back(line.substr(0, tab), parse_rational(value));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return cache;
}

std::string CacheFile::serialize() const
{
    std::string out = std::string(kMagic) + fingerprint + "\n";
    for (const auto& [key, value] : entries) out += key + "\t" + to_fraction_string(value) + "\n";
    return out;
}

CacheFile CacheFile::read(const std::filesystem::path& path, const std::string& fingerprint_if_missing)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        if (std::filesystem::exists(path)) throw ValidationError("cannot read cache file '" + path.string() + "'");
        return CacheFile{fingerprint_if_missing, {}};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void CacheFile::write_atomic(const std::filesystem::path& path) const
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write cache file '" + tmp.string() + "'");
        out << serialize();
        out.flush();
        if (!out) throw ValidationError("failed writing cache file '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

void load_cache(Engine& engine, const std::filesystem::path& path, std::size_t sample_size)
{
    const FiniteGroup& g = engine.group();
    const CacheFile cache = CacheFile::read(path, g.fingerprint());
    if (cache.fingerprint != g.fingerprint())
        throw ValidationError("cache file '" + path.string() + "' belongs to group fingerprint " + cache.fingerprint +
                              ", not " + g.fingerprint());

    std::vector<std::pair<TwistedCorrelator, Rational>> parsed;
    parsed.reserve(cache.entries.size());
    for (const auto& [key, value] : cache.entries) {
        TwistedCorrelator tc = parse_correlator_key(g, key);
        if (tc.chs.empty()) throw ParseError("cache key without ch insertions: " + key);
        if (tc.key(g) != key) throw ParseError("cache key is not canonical: " + key);
        parsed.emplace_back(std::move(tc), value);
    }

    // Spot-check evenly spaced entries against a fresh evaluation.
    if (!parsed.empty() && sample_size > 0) {
        Engine fresh(g);
        const std::size_t count = std::min(sample_size, parsed.size());
        for (std::size_t j = 0; j < count; ++j) {
            const auto& [tc, value] = parsed[j * parsed.size() / count];
            const Rational recomputed = fresh.twisted_correlator(tc);
            if (recomputed != value)
                throw InconsistencyError("corrupted cache entry '" + tc.key(g) + "': stored " + to_fraction_string(value) +
                                         ", recomputed " + to_fraction_string(recomputed));
        }
    }
    for (const auto& [tc, value] : parsed) engine.preload(tc, value);
}

void save_cache(const Engine& engine, const std::filesystem::path& path)
{
    CacheFile cache{engine.group().fingerprint(), engine.export_memo()};
    cache.write_atomic(path);
}

}  // namespace hhodge
