#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superchar/characters.hpp"
#include "superchar/homology.hpp"
#include "superchar/klcore.hpp"
#include "superchar/liealg.hpp"
#include "superchar/reflections.hpp"
#include "superchar/serialize.hpp"
#include "superchar/verify.hpp"

namespace py = pybind11;
using namespace superchar;

// Structured values cross the boundary as JSON text; the Python package decodes them.
namespace {

DominantWeight weight_arg(const std::string& s) { return dominant_from_json(Json::parse(s)); }

std::string char_json(const std::string& type, const std::string& alg, const std::string& weight,
                      std::vector<int> window, int rank, int m, int n) {
    if (window.size() != 3) throw py::value_error("window must be (n_even, n_odd, depth)");
    Window win{window[0], window[1], window[2]};
    if (type == "finite") return character_json(ch_finite_irreducible(weight_from_json(Json::parse(weight)), m, n, win.depth)).dump();
    auto d = weight_arg(weight);
    Algebra a = parse_algebra(alg);
    if (type == "verma") return character_json(ch_parabolic_verma(d, a, win)).dump();
    if (type == "irr") return character_json(ch_irreducible(d, a, win, rank)).dump();
    if (type == "tilting") return character_json(ch_tilting(d, a, win, rank)).dump();
    throw py::value_error("type must be verma, irr, finite or tilting");
}

std::string homology_json(const std::string& weight, int rank, int depth, int degree) {
    auto d = weight_arg(weight);
    GlSuper g = GlSuper::even(d.m + rank);
    auto lam = classical_coords(d, rank);
    auto blocks = levi_blocks(d.m, d.Y, rank);
    ChainComplex cx(nilradical_minus(g, blocks), module_of(std::make_shared<IrreducibleModule>(g, lam)));
    auto pos = classical_positions(d.m, rank);
    Json out = Json::array();
    for (const auto& e : homology_groups(cx, blocks, window_weights(lam, depth), degree)) {
        Weight w;
        for (std::size_t i = 0; i < pos.size(); ++i) w.add(pos[i], e.levi_hw[i]);
        out.push_back(Json{{"degree", e.degree}, {"levi_hw", weight_json(w)}, {"mult", big_json(e.mult)}});
    }
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_superchar, m) {
    m.attr("__version__") = SUPERCHAR_VERSION;

    m.def("theta", [](const std::vector<int>& parts) { return theta_json(theta(Partition(parts))).dump(); });
    m.def("parametrizations", [](const std::string& weight) {
        auto d = weight_arg(weight);
        return Json{{"standard", weight_json(to_standard(d))},
                    {"natural", weight_json(to_natural(d))},
                    {"theta", weight_json(to_theta(d))}}
            .dump();
    });
    m.def("reflect_trace", [](const std::string& weight, const std::string& chain, int n) {
        auto d = weight_arg(weight);
        auto seq = chain == "s" ? sequence_s(n) : sequence_c(n);
        return trace_json(replay_trace(to_theta(d), seq)).dump();
    });
    m.def("closed_form", [](const std::string& weight, int k) {
        return weight_json(closed_form(weight_arg(weight), k)).dump();
    });
    m.def("character", &char_json, py::arg("type"), py::arg("algebra"), py::arg("weight"), py::arg("window"),
          py::arg("rank") = 0, py::arg("m") = 1, py::arg("n") = 0);
    m.def("kl_table", [](const std::string& weight, int rank) {
        return kl_json(kl_canonical(linkage_class(weight_arg(weight), rank))).dump();
    });
    m.def("a_coefficient", [](const std::string& mu, const std::string& la, int rank) {
        return big_json(a_coefficient(weight_arg(mu), weight_arg(la), rank)).dump();
    });
    m.def("homology", &homology_json, py::arg("weight"), py::arg("rank"), py::arg("depth"), py::arg("degree") = 2);
    m.def("vogan_check", [](const std::string& la, const std::string& mu, int n, int rank) {
        return vogan_check(weight_arg(la), weight_arg(mu), n, rank).ok();
    });
    m.def("verify", [](const std::string& suite, std::uint64_t seed) {
        Json out = Json::array();
        for (int id : suite_criteria(suite)) out.push_back(criterion_json(run_criterion(id, seed)));
        return out.dump();
    });
    m.def("hook_schur", [](const std::vector<int>& eta, int p, int q) {
        auto first = Alphabet::range("x", 1, p, 1, Alphabet::Kind::even);
        auto second = Alphabet::range("y", p + 1, q, 1, Alphabet::Kind::even);
        Json out = Json::array();
        for (const auto& [e, c] : hook_schur(Partition(eta), first, second).terms)
            out.push_back(Json{{"exponents", e}, {"coeff", big_json(c)}});
        return out.dump();
    });
}
