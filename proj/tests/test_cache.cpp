#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "hhodge/cache.hpp"
#include "hhodge/error.hpp"

using namespace hhodge;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("hhodge-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter()
    {
        static int n = 0;
        return n;
    }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

Rational z5_value(Engine& engine, const char* ins, const char* chs)
{
    return engine.twisted_correlator({0, parse_insertions(engine.group(), ins), parse_chs(engine.group(), chs)});
}

}  // namespace

TEST_CASE("cache text round trips")
{
    const std::string text = "hhodge-cache v1 0123456789abcdef\nhodge g=0 ins=w:0*5 ch=2:3\t1/50\n";
    const CacheFile c = CacheFile::parse(text);
    CHECK(c.fingerprint == "0123456789abcdef");
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].second == make_rational(1, 50));
    CHECK(c.serialize() == text);
    for (const char* bad : {"", "garbage\n", "hhodge-cache v1 abc\n", "hhodge-cache v1 0123456789abcdef\nkey 1/2\n",
                            "hhodge-cache v1 0123456789abcdef\nkey\t1\n", "hhodge-cache v1 0123456789abcdef\nkey\t1/x\n"})
        CHECK_THROWS_AS(CacheFile::parse(bad), ParseError);
}

TEST_CASE("save and load through an engine")
{
    TempDir dir;
    const fs::path file = dir.path / "z5.cache";
    const FiniteGroup z5 = cyclic_group(5);
    Engine first(z5);
    load_cache(first, file);  // missing file is an empty cache
    CHECK(first.memo_size() == 0);
    CHECK(z5_value(first, "w:0*5", "1:3,1:3") == make_rational(1, 25));
    save_cache(first, file);
    CHECK(fs::exists(file));
    CHECK(!fs::exists(dir.path / "z5.cache.tmp"));
    const std::string saved = slurp(file);
    CHECK(saved.rfind("hhodge-cache v1 " + z5.fingerprint() + "\n", 0) == 0);

    Engine second(z5);
    load_cache(second, file, 1000);
    CHECK(second.memo_size() == first.memo_size());
    save_cache(second, file);
    CHECK(slurp(file) == saved);  // deterministic

    // A fresh engine that computes the same values writes the same file.
    Engine third(z5);
    CHECK(z5_value(third, "w:0*5", "1:3,1:3") == make_rational(1, 25));
    const fs::path other = dir.path / "other.cache";
    save_cache(third, other);
    CHECK(slurp(other) == saved);
}

TEST_CASE("cache rejection")
{
    TempDir dir;
    const fs::path file = dir.path / "z5.cache";
    const FiniteGroup z5 = cyclic_group(5);
    {
        Engine e(z5);
        z5_value(e, "w:0*5", "2:3");
        z5_value(e, "w:0*3,w2:0", "1:3");
        save_cache(e, file);
    }
    const std::string good = slurp(file);

    SUBCASE("another group")
    {
        const FiniteGroup z3 = cyclic_group(3);
        Engine e(z3);
        CHECK_THROWS_AS(load_cache(e, file), ValidationError);
    }
    SUBCASE("corrupted value")
    {
        std::string bad = good;
        const auto at = bad.find("\t1/50");
        REQUIRE(at != std::string::npos);
        bad.replace(at, 5, "\t1/51");
        spill(file, bad);
        Engine e(z5);
        try {
            load_cache(e, file, 1000);
            FAIL("expected an inconsistency");
        } catch (const InconsistencyError& err) {
            CHECK(std::string(err.what()).find("hodge g=0 ins=w:0*5 ch=2:3") != std::string::npos);
            CHECK(std::string(err.what()).find("stored 1/51, recomputed 1/50") != std::string::npos);
        }
    }
    SUBCASE("non-canonical key")
    {
        std::string bad = good;
        bad.replace(bad.find("ins=w:0*5"), 9, "ins=w:0,w:0*4");
        spill(file, bad);
        Engine e(z5);
        CHECK_THROWS_AS(load_cache(e, file), ParseError);
    }
    SUBCASE("garbage")
    {
        spill(file, "not a cache\n");
        Engine e(z5);
        CHECK_THROWS_AS(load_cache(e, file), ParseError);
    }
}
