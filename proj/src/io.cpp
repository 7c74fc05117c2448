#include "momentcone/io.hpp"

#include <fstream>
#include <sstream>

namespace momentcone::io {

using basis::DomainError;
using basis::ExponentVector;
using basis::SystemKind;
using exactla::parse_scalar;
using momentmap::Atom;

namespace {

std::string fraction_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json scalar_list(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

std::vector<Scalar> scalars_from(const json& j) {
    std::vector<Scalar> out;
    for (const auto& e : j) out.push_back(parse_scalar(e.get<std::string>()));
    return out;
}

json index_set(const facial::IndexSet& v, const GroundSet& x) {
    json out = json::array();
    for (std::size_t i : v) out.push_back(x[i].str());
    return out;
}

}  // namespace

json point_to_json(const Point& p) { return scalar_list(p.coords()); }

Point point_from_json(const json& j, Chart chart) {
    auto coords = scalars_from(j);
    return chart == Chart::Affine ? Point::affine(std::move(coords))
                                  : Point::projective(std::move(coords));
}

Point point_from_string(const std::string& text, Chart chart) {
    std::vector<Scalar> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) coords.push_back(parse_scalar(part));
    if (coords.empty()) throw DomainError("bad-parameters", "empty point literal");
    return chart == Chart::Affine ? Point::affine(std::move(coords))
                                  : Point::projective(std::move(coords));
}

json system_to_json(const FunctionSystem& sys) {
    json j;
    switch (sys.kind()) {
        case SystemKind::AffineMonomial:
            j["kind"] = "affine-monomial";
            j["n"] = sys.ambient_n();
            j["d"] = sys.degree();
            break;
        case SystemKind::ProjectiveMonomial:
            j["kind"] = "projective-monomial";
            j["n"] = sys.ambient_n();
            j["d"] = sys.degree();
            break;
        case SystemKind::Gapped1D: {
            j["kind"] = "gapped-1d";
            json exps = json::array();
            for (const auto& a : sys.exponents()) exps.push_back(json::array({a.e[0]}));
            j["exponents"] = exps;
            break;
        }
        case SystemKind::Custom:
            throw DomainError("custom-system", "custom systems have no JSON form");
    }
    j["order"] = sys.order_tag();
    return j;
}

FunctionSystem system_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const std::string order = j.value("order", "grlex");
    if (kind == "affine-monomial")
        return FunctionSystem::affine_monomials(j.at("n").get<int>(), j.at("d").get<int>());
    if (kind == "projective-monomial") {
        const int n = j.at("n").get<int>(), d = j.at("d").get<int>();
        if (order == "paper-B26") {
            if (n != 2 || d != 6)
                throw DomainError("bad-parameters", "the listing order is for n=2, d=6");
            return FunctionSystem::projective_ordered(n, d, catalog::b26_listing_order(),
                                                      order);
        }
        return FunctionSystem::projective_monomials(n, d);
    }
    if (kind == "gapped-1d") {
        std::vector<int> exps;
        for (const auto& e : j.at("exponents"))
            exps.push_back(e.is_array() ? e.at(0).get<int>() : e.get<int>());
        return FunctionSystem::gapped(std::move(exps));
    }
    throw DomainError("bad-parameters", "unknown system kind: " + kind);
}

json measure_to_json(const AtomicMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back(json{{"mass", a.mass.str()}, {"point", point_to_json(a.point)}});
    return json{{"signed", mu.is_signed()}, {"atoms", atoms}};
}

AtomicMeasure measure_from_json(const json& j, Chart chart) {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back(Atom{parse_scalar(a.at("mass").get<std::string>()),
                             point_from_json(a.at("point"), chart)});
    return AtomicMeasure(std::move(atoms), j.value("signed", false));
}

json ground_to_json(const GroundSet& x) {
    json pts = json::array();
    for (const auto& p : x.points()) pts.push_back(point_to_json(p));
    return json{{"points", pts}};
}

GroundSet ground_from_json(const json& j, Chart chart) {
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) pts.push_back(point_from_json(p, chart));
    return GroundSet(std::move(pts));
}

json sequence_to_json(const MomentSequence& s) { return json{{"values", scalar_list(s.values)}}; }

MomentSequence sequence_from_json(const json& j) {
    MomentSequence s;
    s.values = scalars_from(j.at("values"));
    return s;
}

json certificate_to_json(const decompose::MembershipCertificate& cert) {
    json j;
    j["member"] = cert.member;
    if (cert.member)
        j["measure"] = measure_to_json(*cert.measure);
    else
        j["separator"] = scalar_list(cert.separator);
    return j;
}

json face_report_to_json(const facial::FaceReport& rep, const GroundSet& x) {
    return json{{"w_set", index_set(rep.w, x)},
                {"v_set", index_set(rep.v, x)},
                {"face_dimension", rep.face_dim},
                {"gamma_dimension", rep.gamma_dim},
                {"representative", scalar_list(rep.representative)}};
}

json max_mass_report_to_json(const facial::MaxMassReport& rep) {
    return json{{"rho", rep.rho.str()},
                {"kappa", rep.kappa.str()},
                {"dual_optimizer", scalar_list(rep.dual_optimizer)},
                {"residual", scalar_list(rep.residual.values)},
                {"attained", rep.attained},
                {"x_outside_w_residual", rep.x_outside_w_residual},
                {"x_outside_v_residual", rep.x_outside_v_residual}};
}

json psp_result_to_json(const facial::PspResult& r) {
    json j;
    j["feasible"] = r.feasible;
    if (r.feasible) {
        json fs = json::array();
        for (const auto& p : r.functionals) fs.push_back(scalar_list(p));
        j["functionals"] = fs;
    } else {
        j["failing_index"] = r.failing_index;
        j["farkas"] = scalar_list(r.farkas);
    }
    return j;
}

json core_result_to_json(const facial::CoreVarietyResult& r, const GroundSet& x) {
    json trace = json::array();
    for (const auto& level : r.trace) trace.push_back(index_set(level, x));
    return json{{"trace", trace}, {"core", index_set(r.core, x)}, {"iterations", r.iterations}};
}

json named_polynomial_to_json(const catalog::NamedPolynomial& p) {
    json zeros = json::array();
    for (const auto& z : p.zeros) zeros.push_back(point_to_json(z));
    return json{{"name", p.name},
                {"system", system_to_json(p.system)},
                {"coefficients", scalar_list(p.coefficients)},
                {"zeros", zeros}};
}

json table_row_to_json(const catalog::TableRow& row) {
    return json{{"n", row.n},           {"d", row.d},
                {"primed", row.primed}, {"m", row.m},
                {"zcount", row.zcount}, {"r", row.r},
                {"w", fraction_str(row.w)}, {"z", fraction_str(row.z)}};
}

json example_to_json(const catalog::ExampleSystem& ex) {
    json pts = json::array();
    for (const auto& p : ex.points) pts.push_back(point_to_json(p));
    json j{{"name", ex.name},
           {"system", system_to_json(ex.system)},
           {"points", pts},
           {"jacobian_rank", ex.jacobian_rank}};
    if (!ex.kernel_vector.empty()) j["kernel_vector"] = scalar_list(ex.kernel_vector);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("file-not-found", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace momentcone::io
