#include "superchar/serialize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace superchar {

Json big_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(x));
    return Json(x.str());
}

BigInt big_from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    auto parts = j.get<std::vector<int>>();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] < 0 || (i && parts[i] > parts[i - 1]))
            throw std::invalid_argument("partition must be weakly decreasing and nonnegative");
    return Partition(parts);
}

Json theta_json(const ThetaSequence& t) {
    Json out = Json::object();
    for (auto [k, v] : t.entries()) out[std::to_string(k)] = v;
    return out;
}

Json weight_json(const Weight& w) {
    Json c = Json::object();
    for (auto [k, v] : w.coords()) c[std::to_string(k)] = v;
    return Json{{"coords", c}};
}

Weight weight_from_json(const Json& j) {
    const Json& c = j.contains("coords") ? j.at("coords") : j;
    std::map<int, int> m;
    for (const auto& [k, v] : c.items()) m[std::stoi(k)] = v.get<int>();
    return Weight(m);
}

Json dominant_json(const DominantWeight& d) {
    return Json{{"m", d.m}, {"Y", d.Y}, {"neg", d.neg}, {"pos", partition_json(d.pos)}};
}

DominantWeight dominant_from_json(const Json& j, int default_m, const std::vector<int>& default_Y) {
    int m = j.value("m", default_m);
    std::vector<int> Y = j.contains("Y") ? j.at("Y").get<std::vector<int>>() : default_Y;
    std::vector<int> neg = j.contains("neg") ? j.at("neg").get<std::vector<int>>() : std::vector<int>(m, 0);
    Partition pos = j.contains("pos") ? partition_from_json(j.at("pos")) : Partition{};
    return DominantWeight(m, Y, neg, pos);
}

Json laurent_json(const LaurentPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = big_json(c);
    return out;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& [k, v] : j.items()) p.add(std::stoi(k), big_from_json(v));
    return p;
}

Json trace_json(const std::vector<TraceStep>& steps) {
    Json out = Json::array();
    for (const auto& s : steps)
        out.push_back(Json{{"step", s.step},
                           {"root", s.root.str()},
                           {"pairing", s.pairing},
                           {"weight_after", weight_json(s.after)}});
    return out;
}

Json character_json(const CharSeries& c) {
    std::vector<std::tuple<int, Weight, BigInt>> rows;
    for (const auto& [w, mult] : c.terms()) {
        int d = 0;
        try {
            d = depth(c.anchor, w, c.algebra, c.m());
        } catch (const std::exception&) {
            d = -1;
        }
        rows.emplace_back(d, w, mult);
    }
    std::sort(rows.begin(), rows.end());
    Json terms = Json::array();
    for (const auto& [d, w, mult] : rows) terms.push_back(Json{{"weight", weight_json(w)}, {"mult", big_json(mult)}});
    return Json{{"anchor", weight_json(c.anchor)}, {"terms", terms}};
}

Json kl_json(const KLTable& t) {
    Json members = Json::array();
    for (const auto& mu : t.cls.members) members.push_back(dominant_json(mu));
    auto matrix = [](const std::vector<std::vector<LaurentPoly>>& m) {
        Json out = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& p : row) r.push_back(laurent_json(p));
            out.push_back(r);
        }
        return out;
    };
    return Json{{"class_signature", t.cls.signature()},
                {"rank", t.cls.N},
                {"members", members},
                {"L", matrix(t.L)},
                {"U", matrix(t.U)}};
}

Json criterion_json(const CriterionResult& r) {
    return Json{{"id", r.id},         {"key", r.key},       {"title", r.title},
                {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}};
}

}  // namespace superchar
