#include "wilson/fixtures.hpp"

#include "wilson/canonical.hpp"
#include "wilson/closedform.hpp"
#include "wilson/errors.hpp"
#include "wilson/geometry.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wilson {

namespace {

Polynomial winding_polynomial(long n, long area) {
    return Polynomial::monomial(n * area, winding_coefficient(n, area));
}

Fixture catalog_fixture(std::string name, Vec origin, std::string_view moves, int class_id,
                        AreaMap areas, std::string note = {}) {
    Fixture f;
    f.name = std::move(name);
    f.loop = Loop::from_moves(origin, moves);
    f.source = "catalog";
    f.class_id = class_id;
    f.areas = std::move(areas);
    f.expected = catalog_polynomial(class_id, f.areas);
    f.kcount = catalog_entry(class_id).kcount;
    f.note = std::move(note);
    return f;
}

Fixture winding_fixture(std::string shape, Vec origin, std::string_view moves, long area,
                        long n) {
    Fixture f;
    f.shape = std::move(shape);
    f.name = "wind-" + f.shape + "-n" + std::to_string(n);
    f.loop = Loop::from_moves(origin, moves).wound(n);
    f.source = "winding";
    f.shape_area = area;
    f.winding = n;
    f.expected = winding_polynomial(n, area);
    f.kcount = 1;
    return f;
}

std::vector<Fixture> make_builtin() {
    std::vector<Fixture> fs;

    // --- winding families ------------------------------------------------
    for (long w = 1; w <= 3; ++w) {
        for (long h = 1; h <= 3; ++h) {
            std::string m(static_cast<std::size_t>(h), 'U');
            m.append(static_cast<std::size_t>(w), 'R');
            m.append(static_cast<std::size_t>(h), 'D');
            m.append(static_cast<std::size_t>(w), 'L');
            std::string shape = "rect-" + std::to_string(w) + "x" + std::to_string(h);
            fs.push_back(winding_fixture(shape, {0, 0}, m, w * h, 1));
        }
    }
    fs.push_back(winding_fixture("l-tromino", {0, 0}, "UURDRDLL", 3, 1));
    for (long n = 2; n <= 4; ++n) {
        fs.push_back(winding_fixture("rect-1x1", {0, 0}, "URDL", 1, n));
        fs.push_back(winding_fixture("rect-1x2", {0, 0}, "UURDDL", 2, n));
        fs.push_back(winding_fixture("rect-2x1", {0, 0}, "URRDLL", 2, n));
        fs.push_back(winding_fixture("rect-1x3", {0, 0}, "UUURDDDL", 3, n));
        fs.push_back(winding_fixture("l-tromino", {0, 0}, "UURDRDLL", 3, n));
    }

    // --- catalog classes --------------------------------------------------
    fs.push_back(catalog_fixture("simple-unit", {0, 0}, "URDL", 1, {{"s", 1}}));
    fs.push_back(catalog_fixture("figure-eight", {1, 1}, "DLURRULD", 2,
                                 {{"s1", 1}, {"s2", 1}},
                                 "two unit lobes joined at one vertex"));
    fs.push_back(catalog_fixture("chain-three", {1, 1}, "DLURRUURDLLD", 4,
                                 {{"s1", 1}, {"s2", 1}, {"s3", 1}},
                                 "three unit lobes chained through two vertices"));

    fs.push_back(catalog_fixture("curl-s7-t1", {1, 1}, "URDLLUURRRDDDLLU", 3,
                                 {{"s", 7}, {"t", 1}},
                                 "embedded curl; expectation vanishes at t = 1"));
    fs.push_back(catalog_fixture("curl-s9-t2-a", {1, 1}, "UURDDLLUUURRRDDDDLLU", 3,
                                 {{"s", 9}, {"t", 2}}, "embedded curl, tall pocket"));
    fs.push_back(catalog_fixture("curl-s9-t2-b", {1, 1}, "URRDLLLUURRRRDDDLLLU", 3,
                                 {{"s", 9}, {"t", 2}}, "embedded curl, wide pocket"));
    fs.push_back(catalog_fixture("curl-s13-t2", {1, 1}, "URRDLLLUUURRRRDDDDLLLU", 3,
                                 {{"s", 13}, {"t", 2}}));
    fs.push_back(catalog_fixture("curl-sq-s2-t1", {0, 0}, "URDLURRRDLLL", 3,
                                 {{"s", 2}, {"t", 1}},
                                 "squeezed: pocket boundary doubles lap edges"));
    fs.push_back(catalog_fixture("curl-sq-s2-t2", {0, 0}, "URRDLLURRRRDLLLL", 3,
                                 {{"s", 2}, {"t", 2}},
                                 "squeezed: pocket boundary doubles lap edges"));
    fs.push_back(catalog_fixture("curl-sq-s3-t2", {0, 0}, "URRDLLURRRRRDLLLLL", 3,
                                 {{"s", 3}, {"t", 2}},
                                 "squeezed: pocket boundary doubles lap edges"));

    fs.push_back(catalog_fixture("double-curl-s18", {1, 1},
                                 "URRDLLLUUURRRRRDDDLUURRDDDLLLLLU", 5,
                                 {{"s", 18}, {"t1", 2}, {"t2", 2}},
                                 "two disjoint pockets on one lap"));

    fs.push_back(catalog_fixture("nested-curl-s13", {1, 1}, "URRULDDLLUUURRRRDDDDLLLU",
                                 6, {{"s", 13}, {"t1", 1}, {"t2", 1}},
                                 "pocket inside a pocket"));
    fs.push_back(catalog_fixture("nested-curl-s16", {1, 1},
                                 "URRRULLDDLLUUURRRRRDDDDLLLLU", 6,
                                 {{"s", 16}, {"t1", 1}, {"t2", 2}},
                                 "pocket inside a pocket"));
    fs.push_back(catalog_fixture("nested-curl-sq", {1, 1}, "URRULDDLUURRDLDL", 6,
                                 {{"s", 1}, {"t1", 1}, {"t2", 1}},
                                 "squeezed nested pockets at the minimal areas"));

    fs.push_back(catalog_fixture("curl-lobe-s9", {1, 1}, "UURDDLLUUURRRDDDDDRULLLU", 7,
                                 {{"s1", 9}, {"s2", 1}, {"t", 2}},
                                 "curl plus a lobe hanging off the pocket corner"));

    fs.push_back(catalog_fixture("coil-s18", {1, 1},
                                 "URRDLLLUURRRRDDDLLLLDLUUUUURRRRRRDDDDDLLLLUU", 8,
                                 {{"s", 18}, {"t", 9}, {"u", 2}},
                                 "triply wound pocket inside a doubly wound one"));
    fs.push_back(catalog_fixture("coil-sq", {1, 1}, "URRDLLURRRDLLLURRRRDLLLL", 8,
                                 {{"s", 1}, {"t", 1}, {"u", 2}},
                                 "squeezed coil at the minimal areas"));

    fs.push_back(catalog_fixture("pockets-s16", {1, 1},
                                 "UULDRRRULDDLLDLUUUURRRRRDDDDLLLU", 15,
                                 {{"s", 16}, {"t1", 1}, {"t2", 1}, {"t3", 1}},
                                 "three pockets; canonical collection has 4 members"));

    return fs;
}

} // namespace

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fs = make_builtin();
    return fs;
}

std::vector<std::array<long, 3>> region_signature(const Loop& l) {
    std::vector<std::array<long, 3>> sig;
    const LoopGeometry g = analyze_loop(remove_backtracks(l));
    for (const Region& r : g.regions) {
        if (r.exterior) continue;
        sig.push_back({r.h < 0 ? -r.h : r.h, r.d, r.area});
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

Json fixture_to_json(const Fixture& f) {
    Json j = Json::object();
    j["name"] = f.name;
    j["loop"] = loop_to_json(f.loop);
    j["source"] = f.source;
    if (f.source == "catalog") {
        j["class"] = f.class_id;
        j["slug"] = catalog_entry(f.class_id).slug;
        Json areas = Json::object();
        for (const auto& [k, v] : f.areas) areas[k] = v;
        j["areas"] = std::move(areas);
    } else if (f.source == "winding") {
        j["shape"] = f.shape;
        j["area"] = f.shape_area;
        j["winding"] = f.winding;
    }
    j["expected"] = polynomial_to_json(f.expected);
    j["kcount"] = f.kcount;
    Json regions = Json::array();
    for (const auto& r : f.regions) regions.push_back(Json::array({r[0], r[1], r[2]}));
    j["regions"] = std::move(regions);
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

Fixture fixture_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("loop") ||
        !j.contains("source") || !j.contains("expected") || !j.contains("kcount")) {
        throw ParseError("fixture needs name/loop/source/expected/kcount: " + j.dump());
    }
    Fixture f;
    f.name = j["name"].get<std::string>();
    f.loop = loop_from_json(j["loop"]);
    f.source = j["source"].get<std::string>();
    f.expected = polynomial_from_json(j["expected"]);
    f.kcount = j["kcount"].get<long>();
    if (j.contains("note")) f.note = j["note"].get<std::string>();
    if (j.contains("regions")) {
        for (const auto& r : j["regions"]) {
            if (!r.is_array() || r.size() != 3) {
                throw ParseError("fixture region entries must be [h, d, area] triples");
            }
            f.regions.push_back({r[0].get<long>(), r[1].get<long>(), r[2].get<long>()});
        }
    }

    if (f.source == "catalog") {
        f.class_id = j.at("class").get<int>();
        for (const auto& [key, val] : j.at("areas").items()) {
            f.areas[key] = val.get<long>();
        }
        const Polynomial want = catalog_polynomial(f.class_id, f.areas);
        if (!(want == f.expected)) {
            throw ParseError("fixture " + f.name + ": stored polynomial " +
                             f.expected.to_string() + " != class formula " +
                             want.to_string());
        }
        if (f.kcount != catalog_entry(f.class_id).kcount) {
            throw ParseError("fixture " + f.name + ": kcount disagrees with its class");
        }
    } else if (f.source == "winding") {
        f.shape = j.at("shape").get<std::string>();
        f.shape_area = j.at("area").get<long>();
        f.winding = j.at("winding").get<long>();
        const Polynomial want = winding_polynomial(f.winding, f.shape_area);
        if (!(want == f.expected)) {
            throw ParseError("fixture " + f.name + ": stored polynomial " +
                             f.expected.to_string() + " != winding formula " +
                             want.to_string());
        }
    } else if (f.source != "explicit") {
        throw ParseError("fixture " + f.name + ": unknown source '" + f.source + "'");
    }
    return f;
}

void write_fixture_files(const std::string& dir) {
    namespace fsys = std::filesystem;
    fsys::create_directories(dir);

    Json manifest = Json::object();
    Json list = Json::array();
    for (const Fixture& f : builtin_fixtures()) {
        Fixture full = f;
        full.regions = region_signature(f.loop);
        const std::string file = f.name + ".json";
        std::ofstream out(fsys::path(dir) / file);
        out << fixture_to_json(full).dump(2) << "\n";

        Json entry = Json::object();
        entry["file"] = file;
        entry["name"] = f.name;
        entry["source"] = f.source;
        if (f.source == "catalog") {
            entry["class"] = f.class_id;
            entry["slug"] = catalog_entry(f.class_id).slug;
        } else if (f.source == "winding") {
            entry["shape"] = f.shape;
            entry["winding"] = f.winding;
        }
        entry["kcount"] = f.kcount;
        if (!f.note.empty()) entry["note"] = f.note;
        list.push_back(std::move(entry));
    }
    manifest["fixtures"] = std::move(list);
    manifest["notes"] = Json::array(
        {"Class fixtures declare a catalog row (1-28) and named areas; their "
         "expected polynomial is the row formula and is revalidated on load.",
         "Squeezed fixtures realize area labels below the embedded minimum by "
         "running a pocket boundary along already-used edges; they satisfy the "
         "same class formulas.",
         "curl-lobe-s9 carries its lobe at a transverse double point of the "
         "pocket corner, the word order pairing the crossing chords across laps.",
         "Winding fixtures repeat a simple shape n times; their expectation is "
         "the one-term winding-coefficient polynomial.",
         "Region triples are (|winding|, crossing distance, area) of the "
         "interior regions, sorted."});
    std::ofstream out(fsys::path(dir) / "manifest.json");
    out << manifest.dump(2) << "\n";
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
    namespace fsys = std::filesystem;
    if (!fsys::is_directory(dir)) throw ParseError("not a fixture directory: " + dir);
    std::vector<fsys::path> files;
    for (const auto& e : fsys::directory_iterator(dir)) {
        if (e.path().extension() == ".json" && e.path().filename() != "manifest.json") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<Fixture> fs;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open fixture: " + path.string());
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception& e) {
            throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
        }
        Fixture f = fixture_from_json(j);

        const auto sig = region_signature(f.loop);
        if (!f.regions.empty() && sig != f.regions) {
            throw ParseError("fixture " + f.name +
                             ": stored region signature disagrees with the loop");
        }
        const auto col = canonical_collection(f.loop);
        if (col.cardinality != f.kcount ||
            static_cast<long>(col.all.size()) != f.kcount) {
            std::ostringstream os;
            os << "fixture " << f.name << ": canonical collection has "
               << col.all.size() << " members, declared " << f.kcount;
            throw ParseError(os.str());
        }
        fs.push_back(std::move(f));
    }
    return fs;
}

} // namespace wilson
