#include "astk/cech.hpp"
#include "astk/completion.hpp"
#include "astk/report.hpp"
#include "astk/series.hpp"
#include "astk/shadow.hpp"
#include "astk/trace.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace astk {

namespace {

using Kind = ParamSpec::Kind;

Json rat(const Rational& q) { return format_rational(q); }

Json vec(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat(x));
    return a;
}

Json polys(const std::vector<Poly>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

Json cert(const MembershipCertificate& c) {
    return {{"generators", polys(c.generators)},
            {"coefficients", polys(c.coefficients)},
            {"target", c.target.to_string()},
            {"valid", c.validate()}};
}

Json cert(const AlgebraCertificate& c) {
    Json g = Json::array(), k = Json::array();
    for (const auto& v : c.generators) g.push_back(vec(v));
    for (const auto& v : c.coefficients) k.push_back(vec(v));
    return {{"generators", g}, {"coefficients", k}, {"target", vec(c.target)}, {"valid", c.validate()}};
}

template <class C>
Json certs(const std::vector<C>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(cert(c));
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GroupSpec group_param(const Json& p, CheckOutcome& out) {
    const std::string g = p.at("group").get<std::string>();
    if (g.size() > 5 && g.substr(g.size() - 5) == ".json") out.input_bytes += read_file(g);
    return parse_group_spec(g);
}

Status search_status(bool sound, bool found) {
    if (!sound) return Status::Fail;
    return found ? Status::Pass : Status::Undetermined;
}

// ---------------------------------------------------------------- completion checks

CheckOutcome run_bgm_k(const Json& p) {
    const int N = p.at("precision").get<int>();
    auto L = make_ring({"x"}, RingMode::Laurent, CoeffDomain::Integers);
    auto Lq = rationalized(L);
    Poly x = Poly::variable(Lq, 0), xi = Poly::variable(Lq, 0, -1), one = Poly::constant(Lq, 1);
    IdealGens I(L, {Poly::variable(L, 0) - Poly::constant(L, 1)});
    auto q = complete_truncated(I, N);
    std::vector<Poly> ubasis;
    for (int k = 0; k <= N; ++k) ubasis.push_back((x - one).pow(k));
    auto cx = coordinates_in(q, ubasis, x);
    auto cxi = coordinates_in(q, ubasis, xi);
    Vector want_x(N + 1, Rational(0)), want_xi(N + 1, Rational(0));
    want_x[0] = 1;
    if (N >= 1) want_x[1] = 1;
    for (int k = 0; k <= N; ++k) want_xi[k] = k % 2 ? -1 : 1;
    const bool x_ok = cx && *cx == want_x, xi_ok = cxi && *cxi == want_xi;
    const bool inverse_ok = q.algebra.multiply(q.coordinates(x), q.coordinates(xi)) == q.coordinates(one);
    auto u = TruncSeries::variable({"u"}, N);
    auto inv = (TruncSeries::constant({"u"}, N, 1) + u).inverse();
    bool series_ok = cxi.has_value();
    for (int k = 0; k <= N && series_ok; ++k) series_ok = inv.coeff(k) == (*cxi)[k];
    bool integral = x_ok && xi_ok;
    Json tower = Json::array();
    bool tower_ok = true;
    for (int m = 0; m <= N; ++m) {
        const std::size_t d = complete_truncated(I, m).dim();
        tower.push_back({{"m", m}, {"dim", d}});
        tower_ok = tower_ok && d == static_cast<std::size_t>(m + 1);
    }
    const bool consistent = quotient_is_consistent(q);
    CheckOutcome out;
    out.result = {{"rank", q.dim()},
                  {"free_rank_expected", N + 1},
                  {"basis", "u^k = (x-1)^k, k <= N"},
                  {"x", cx ? vec(*cx) : Json(nullptr)},
                  {"x_inverse", cxi ? vec(*cxi) : Json(nullptr)},
                  {"x_is_1_plus_u", x_ok},
                  {"x_inverse_matches_series", series_ok},
                  {"x_times_x_inverse_is_one", inverse_ok},
                  {"integral_coordinates", integral},
                  {"tower", tower},
                  {"consistent", consistent}};
    const bool pass = q.dim() == static_cast<std::size_t>(N + 1) && x_ok && xi_ok && inverse_ok && series_ok && tower_ok && consistent;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

CheckOutcome run_bmun(const Json& p) {
    const int lo = p.at("n_min").get<int>(), hi = p.at("n_max").get<int>();
    if (lo > hi) throw UsageError("bmun: n_min exceeds n_max");
    CheckOutcome out;
    Json cases = Json::array();
    bool all = true;
    for (int n = lo; n <= hi; ++n) {
        auto alg = quotient_algebra(UPoly::x_power(n) - UPoly::constant(1));
        std::optional<Vector> hint;
        if (alg.dim() > 1) hint = alg.basis_vector(1);
        auto s = idempotent_split(alg, Vector(alg.dim(), Rational(1)), hint);
        Json c = {{"n", n}, {"laws_hold", s.laws_hold()}, {"dims", s.dims}};
        Json f = Json::array();
        for (const auto& u : s.factors) f.push_back(u.to_string());
        c["factors"] = f;
        bool ok = s.laws_hold() && s.augmentation_local.has_value();
        if (s.augmentation_local) {
            const Vector& e = s.idempotents[*s.augmentation_local];
            const Vector t = alg.dim() > 1 ? alg.basis_vector(1) : alg.unit();
            const bool t_is_one = alg.multiply(t, e) == e;
            const std::size_t d = s.dims[*s.augmentation_local];
            c["local_dim"] = d;
            c["local_idempotent"] = vec(e);
            c["t_acts_as_one"] = t_is_one;
            ok = ok && d == 1 && t_is_one;
        }
        c["ok"] = ok;
        all = all && ok;
        cases.push_back(c);
    }
    out.result = {{"cases", cases}};
    out.status = all ? Status::Pass : Status::Fail;
    return out;
}

CheckOutcome run_adams(const Json& p) {
    const int P = p.at("precision").get<int>();
    const int J = std::min<int>(p.at("max_power").get<int>(), P);
    const int window = p.at("window").get<int>();
    std::vector<unsigned> ells;
    {
        std::stringstream ss(p.at("ells").get<std::string>());
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                long l = std::stol(tok);
                if (l < 1 || l > 50) throw std::out_of_range("ell");
                ells.push_back(static_cast<unsigned>(l));
            } catch (const std::exception&) {
                throw UsageError("adams: --ells expects a comma-separated list of small positive integers");
            }
        }
    }
    const std::vector<std::string> var{"u"};
    auto u = TruncSeries::variable(var, P);
    auto one = TruncSeries::constant(var, P, 1);
    auto lg = series_log(one + u);
    bool eigen_ok = true;
    Json eig = Json::array();
    for (unsigned ell : ells) {
        auto inner = (one + u).pow(ell) - one;
        for (int j = 0; j <= J; ++j) {
            auto lj = lg.pow(static_cast<unsigned>(j));
            Rational scale = 1;
            for (int k = 0; k < j; ++k) scale *= ell;
            const bool ok = series_compose(lj, inner) == scale * lj;
            eigen_ok = eigen_ok && ok;
            eig.push_back({{"ell", ell}, {"j", j}, {"holds", ok}});
        }
    }
    ExactMatrix m(P + 1, J + 1);
    bool echelon = true;
    for (int j = 0; j <= J; ++j) {
        auto lj = lg.pow(static_cast<unsigned>(j));
        for (int k = 0; k <= P; ++k) {
            m(k, j) = lj.coeff(k);
            if (k < j && lj.coeff(k) != 0) echelon = false;
        }
        if (lj.coeff(j) == 0) echelon = false;
    }
    const std::size_t rank = m.rank();
    auto ae = adams_eigenspaces(2, window);
    std::size_t eigen_dim = 0;
    bool constants = true;
    for (const auto& sp : ae.eigenspaces)
        for (const auto& f : sp) {
            ++eigen_dim;
            constants = constants && f.degree() == 0 && !f.is_zero() && !f.has_negative_exponents();
        }
    Json evals = Json::array();
    for (const auto& e : ae.eigenvalues) evals.push_back(rat(e));
    CheckOutcome out;
    out.result = {{"series_eigen_equation", eig},
                  {"max_power_used", J},
                  {"matrix_shape", {P + 1, J + 1}},
                  {"matrix_rank", rank},
                  {"matrix_echelon_with_diagonal_pivots", echelon},
                  {"psi2_window", window},
                  {"psi2_stable_basis", polys(ae.stable_basis)},
                  {"psi2_characteristic", ae.characteristic.to_string("X")},
                  {"psi2_eigenvalues", evals},
                  {"psi2_eigenspace_dim", eigen_dim},
                  {"psi2_eigenvectors_are_constants", constants && eigen_dim == 1},
                  {"note", "log(x^j) is read as the j-th power log(1+u)^j with x = 1+u"}};
    const bool pass = eigen_ok && echelon && rank == static_cast<std::size_t>(J + 1) && constants && eigen_dim == 1;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

Json containment_json(const ContainmentReport& r, Status& st) {
    Json w = Json::array();
    for (const auto& [n, f] : r.lower_witnesses) w.push_back({{"n", n}, {"product", f.to_string()}});
    const bool audit = r.audit();
    st = search_status(audit && r.reverse_holds && r.augmentation_vanishes, r.exponent.has_value());
    return {{"h", r.h_name},
            {"g", r.g_name},
            {"n_max", r.n_max},
            {"exponent", r.exponent ? Json(*r.exponent) : Json(nullptr)},
            {"h_generators", polys(r.h_generators)},
            {"restricted_generators", polys(r.restricted_generators)},
            {"relations", polys(r.relations)},
            {"forward", certs(r.forward)},
            {"reverse", certs(r.reverse)},
            {"lower_witnesses", w},
            {"audit", audit},
            {"reverse_holds", r.reverse_holds},
            {"augmentation_vanishes", r.augmentation_vanishes},
            {"status", status_name(st)}};
}

CheckOutcome run_change_of_groups(const Json& p) {
    const std::string pair = p.at("pair").get<std::string>();
    const unsigned nmax = p.at("max_exponent").get<unsigned>();
    std::vector<std::pair<std::string, std::string>> cases;
    if (pair == "mu_n-gm")
        for (int n = 2; n <= p.at("max_n").get<int>(); ++n) cases.emplace_back("mu" + std::to_string(n), "gm");
    else if (pair == "t1-sl2")
        cases.emplace_back("gm", "sl2");
    else
        cases.emplace_back("t2", "gl2");
    CheckOutcome out;
    Json arr = Json::array();
    std::vector<Status> sts;
    for (const auto& [h, g] : cases) {
        auto r = containment_exponent(rep_ring(parse_group_spec(h)), rep_ring(parse_group_spec(g)), nmax);
        Status s;
        arr.push_back(containment_json(r, s));
        sts.push_back(s);
    }
    out.result = {{"pair", pair}, {"cases", arr}};
    out.status = combine(sts);
    return out;
}

CheckOutcome run_koszul(const Json& p) {
    const int k = p.at("vars").get<int>(), N = p.at("precision").get<int>();
    std::vector<std::string> names;
    const char* small[] = {"x", "y", "z", "w"};
    for (int i = 0; i < k; ++i) names.push_back(small[i]);
    auto R = make_ring(names);
    std::vector<Poly> seq;
    for (int i = 0; i < k; ++i) seq.push_back(Poly::variable(R, i));
    auto r = koszul_completion_check(R, seq, N);
    CheckOutcome out;
    out.result = {{"ring", names},
                  {"sequence", polys(r.sequence)},
                  {"node_dim", r.node_dim},
                  {"node_prediction", r.node_prediction},
                  {"koszul_side_dim", r.koszul_side_dim},
                  {"adic_side_dim", r.adic_side_dim},
                  {"koszul_tower", r.koszul_tower},
                  {"adic_tower", r.adic_tower},
                  {"witness_rank", r.witness.rank()},
                  {"isomorphic", r.isomorphic},
                  {"regular_prediction_holds", r.regular_prediction_holds}};
    const bool pass = r.isomorphic && r.koszul_side_dim == r.adic_side_dim && r.regular_prediction_holds;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

FinDimAlgebra algebra_from_json(const Json& j, Vector& aug, bool& has_aug) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t d = labels.size();
    auto vecof = [&](const Json& a) {
        Vector v;
        for (const auto& x : a) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
        if (v.size() != d) throw UsageError("algebra descriptor: vector of wrong length");
        return v;
    };
    std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
    const Json& t = j.at("table");
    if (t.size() != d) throw UsageError("algebra descriptor: table must be dim x dim x dim");
    for (std::size_t a = 0; a < d; ++a) {
        if (t[a].size() != d) throw UsageError("algebra descriptor: table must be dim x dim x dim");
        for (std::size_t b = 0; b < d; ++b) table[a][b] = vecof(t[a][b]);
    }
    has_aug = j.contains("augmentation");
    aug = has_aug ? vecof(j.at("augmentation")) : Vector(d, Rational(0));
    return FinDimAlgebra(labels, table, vecof(j.at("unit")));
}

CheckOutcome run_split(const Json& p) {
    const std::string spec = p.at("algebra").get<std::string>();
    CheckOutcome out;
    FinDimAlgebra alg;
    Vector aug;
    bool has_aug = false;
    std::optional<Vector> hint;
    std::string described;
    auto from_upoly = [&](const UPoly& m) {
        if (m.degree() < 1) throw UsageError("split: the polynomial must have positive degree");
        alg = quotient_algebra(m);
        has_aug = m(Rational(1)) == 0;
        aug = Vector(alg.dim(), has_aug ? Rational(1) : Rational(0));
        if (alg.dim() > 1) hint = alg.basis_vector(1);
        described = "Q[t]/(" + m.to_string() + ")";
    };
    unsigned n = 0;
    std::string text = spec;
    if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
        text = read_file(spec);
        out.input_bytes = text;
    }
    if (spec.rfind("mu", 0) == 0 && spec.size() > 2 && std::all_of(spec.begin() + 2, spec.end(), ::isdigit)) {
        n = static_cast<unsigned>(std::stoul(spec.substr(2)));
        from_upoly(UPoly::x_power(n) - UPoly::constant(1));
    } else if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("split: bad JSON: ") + e.what());
        }
        if (j.is_array()) {
            std::vector<Rational> c;
            for (const auto& x : j) c.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
            from_upoly(UPoly(c));
        } else {
            try {
                alg = algebra_from_json(j, aug, has_aug);
            } catch (const Json::exception& e) {
                throw UsageError(std::string("split: bad algebra descriptor: ") + e.what());
            }
            described = "structure constants";
        }
    } else {
        Poly f = parse_poly(make_ring({"t"}), text);
        std::vector<Rational> c(static_cast<std::size_t>(std::max(0, f.degree())) + 1, Rational(0));
        for (const auto& [m, x] : f.terms()) c[m[0]] = x;
        from_upoly(UPoly(c));
    }
    auto s = idempotent_split(alg, aug, hint);
    Json idem = Json::array(), fac = Json::array();
    for (const auto& e : s.idempotents) idem.push_back(vec(e));
    for (const auto& f : s.factors) fac.push_back(f.to_string());
    out.result = {{"algebra", described},
                  {"dim", alg.dim()},
                  {"separating_element", vec(s.separating)},
                  {"minimal_polynomial", s.minimal_polynomial.to_string()},
                  {"factors", fac},
                  {"dims", s.dims},
                  {"idempotents", idem},
                  {"augmentation", has_aug ? vec(aug) : Json(nullptr)},
                  {"augmentation_local", s.augmentation_local ? Json(*s.augmentation_local) : Json(nullptr)},
                  {"laws_hold", s.laws_hold()},
                  {"complete", s.complete},
                  {"notes", s.notes}};
    out.status = !s.laws_hold() ? Status::Fail : s.complete ? Status::Pass : Status::Undetermined;
    return out;
}

// ring descriptor: "poly:x,y", "laurent:x,y" or {"vars": [...], "laurent": bool}
RingPtr parse_ring(const std::string& text, std::vector<std::string>& relations_out) {
    if (!text.empty() && text.front() == '{') {
        Json j;
        try {
            j = Json::parse(text);
            auto vars = j.at("vars").get<std::vector<std::string>>();
            if (vars.empty()) throw UsageError("ring descriptor needs variables");
            if (j.contains("relations")) relations_out = j.at("relations").get<std::vector<std::string>>();
            return make_ring(vars, j.value("laurent", false) ? RingMode::Laurent : RingMode::Polynomial);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("bad ring descriptor: ") + e.what());
        }
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("ring descriptor must look like poly:x,y or laurent:x,y");
    const std::string mode = text.substr(0, colon);
    if (mode != "poly" && mode != "laurent") throw UsageError("ring mode must be poly or laurent");
    std::vector<std::string> vars;
    std::stringstream ss(text.substr(colon + 1));
    std::string v;
    while (std::getline(ss, v, ',')) {
        if (v.empty()) throw UsageError("empty variable name in ring descriptor");
        vars.push_back(v);
    }
    if (vars.empty()) throw UsageError("ring descriptor needs variables");
    return make_ring(vars, mode == "laurent" ? RingMode::Laurent : RingMode::Polynomial);
}

std::vector<Poly> parse_poly_list(const RingPtr& R, const std::string& text) {
    std::vector<std::string> items;
    if (!text.empty() && text.front() == '[') {
        try {
            items = Json::parse(text).get<std::vector<std::string>>();
        } catch (const Json::exception& e) {
            throw UsageError(std::string("bad polynomial list: ") + e.what());
        }
    } else {
        std::stringstream ss(text);
        std::string it;
        while (std::getline(ss, it, ','))
            if (it.find_first_not_of(' ') != std::string::npos) items.push_back(it);
    }
    std::vector<Poly> out;
    for (const auto& s : items) out.push_back(parse_poly(R, s));
    return out;
}

CheckOutcome run_complete(const Json& p) {
    std::vector<std::string> rel_text;
    RingPtr R = parse_ring(p.at("ring").get<std::string>(), rel_text);
    auto gens = parse_poly_list(R, p.at("ideal").get<std::string>());
    std::vector<Poly> rels = parse_poly_list(R, p.at("relations").get<std::string>());
    for (const auto& s : rel_text) rels.push_back(parse_poly(R, s));
    const int N = p.at("precision").get<int>();
    auto q = complete_truncated(IdealGens(R, gens), N, rels);
    CheckOutcome out;
    if (q.identity_quotient) {
        out.result = {{"identity_quotient", true}, {"note", "zero ideal: the completion is the ring itself"}};
        out.status = Status::Pass;
        return out;
    }
    Json images = Json::object();
    for (std::size_t i = 0; i < q.generator_names.size(); ++i) images[q.generator_names[i]] = vec(q.generator_images[i]);
    Json tower = Json::array();
    bool surj = true;
    for (int m = 0; m <= N; ++m) {
        auto low = complete_truncated(IdealGens(R, gens), m, rels);
        tower.push_back({{"m", m}, {"dim", low.dim()}});
        surj = surj && lowering_map(q, low).rank() == low.dim();
    }
    const bool consistent = quotient_is_consistent(q);
    out.result = {{"dim", q.dim()},
                  {"basis", q.basis_labels},
                  {"generator_images", images},
                  {"ideal", polys(gens)},
                  {"relations", polys(rels)},
                  {"tower", tower},
                  {"lowering_maps_surjective", surj},
                  {"consistent", consistent}};
    out.status = consistent && surj ? Status::Pass : Status::Fail;
    return out;
}

// ---------------------------------------------------------------- trace checks

RepElement element_param(const RepRingPtr& rep, const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception&) {
        j = Json{{"poly", text}};
    }
    if (!j.is_object()) throw UsageError("trace: --element must be a JSON object or a polynomial");
    if (j.value("regular", false)) return regular_representation(rep);
    if (j.contains("character")) {
        if (rep->polynomial_type()) throw UsageError("trace: characters by name need a finite group");
        const auto& labels = rep->algebra.labels();
        auto it = std::find(labels.begin(), labels.end(), j.at("character").get<std::string>());
        if (it == labels.end()) throw UsageError("trace: unknown character");
        return RepElement::from_coords(rep, rep->algebra.basis_vector(static_cast<std::size_t>(it - labels.begin())));
    }
    if (j.contains("coords")) {
        Vector v;
        for (const auto& x : j.at("coords")) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
        if (v.size() != rep->algebra.dim()) throw UsageError("trace: coordinate vector of wrong length");
        return RepElement::from_coords(rep, v);
    }
    if (j.contains("distinguished")) {
        const std::string name = j.at("distinguished").get<std::string>();
        for (std::size_t i = 0; i < rep->distinguished_names.size(); ++i)
            if (rep->distinguished_names[i] == name) return RepElement::from_poly(rep, rep->distinguished[i]);
        std::string known;
        for (const auto& d : rep->distinguished_names) known += (known.empty() ? "" : ", ") + d;
        throw UsageError("trace: unknown generator " + name + " (have " + known + ")");
    }
    if (j.contains("poly")) {
        if (!rep->polynomial_type()) throw UsageError("trace: finite groups take coords or character");
        return RepElement::from_poly(rep, parse_poly(rep->ring, j.at("poly").get<std::string>()));
    }
    throw UsageError("trace: element needs one of regular, character, coords, distinguished, poly");
}

CheckOutcome run_trace(const Json& p) {
    CheckOutcome out;
    auto rep = rep_ring(group_param(p, out));
    auto cr = class_function_ring(rep);
    RepElement v = element_param(rep, p.at("element").get<std::string>());
    auto t = dennis_trace(cr, v);
    const Rational ue = unit_evaluation(t), aug = augmentation(v);
    out.result = {{"element", v.to_string()},
                  {"class_model", class_model_name(cr->model)},
                  {"trace", t.to_string()},
                  {"unit_evaluation", rat(ue)},
                  {"augmentation", rat(aug)},
                  {"unit_evaluation_is_augmentation", ue == aug}};
    if (cr->finite) {
        Json labels = Json::array();
        for (const auto& c : cr->finite->classes) labels.push_back(cr->finite->elements[c.front()]);
        out.result["classes"] = labels;
    }
    if (cr->model == ClassModel::SymmetricLaurent) out.result["carrier_relations"] = polys(cr->relations);
    out.status = ue == aug ? Status::Pass : Status::Fail;
    return out;
}

CheckOutcome run_trace_radical(const Json& p) {
    CheckOutcome out;
    GroupSpec g = group_param(p, out);
    auto r = radical_compare(g, p.at("max_exponent").get<unsigned>());
    Json j = Json::array(), t = Json::array(), w = Json::array();
    for (const auto& x : r.j_generators) j.push_back(x.to_string());
    for (const auto& x : r.trace_generators) t.push_back(x.to_string());
    for (const auto& [n, s] : r.lower_witnesses) w.push_back({{"n", n}, {"product", s}});
    const bool audit = r.audit();
    out.result = {{"group", r.group},
                  {"class_model", class_model_name(r.ring->model)},
                  {"n_max", r.n_max},
                  {"exponent", r.exponent ? Json(*r.exponent) : Json(nullptr)},
                  {"j_generators", j},
                  {"trace_generators", t},
                  {"forward", r.ring->polynomial_type() ? certs(r.forward) : certs(r.forward_alg)},
                  {"reverse", r.ring->polynomial_type() ? certs(r.reverse) : certs(r.reverse_alg)},
                  {"lower_witnesses", w},
                  {"unit_evaluation_vanishes", r.unit_evaluation_vanishes},
                  {"reverse_holds", r.reverse_holds},
                  {"audit", audit}};
    bool extra_ok = true;
    if (r.ring->finite) {
        // tr(regular) − |G|: zero at the identity, −|G| elsewhere
        auto rep = r.ring->rep;
        auto reg = dennis_trace(r.ring, regular_representation(rep));
        Vector v = reg.coords;
        for (auto& x : v) x -= Rational(static_cast<long>(r.ring->finite->order()));
        std::vector<Vector> jv;
        for (const auto& x : r.j_generators) jv.push_back(x.coords);
        const bool gen = r.ring->algebra->ideal_dimension({v}) == r.ring->algebra->ideal_dimension(jv);
        out.result["regular_element"] = vec(v);
        out.result["regular_element_generates_j"] = gen;
        extra_ok = gen;
    }
    out.status = search_status(audit && r.reverse_holds && r.unit_evaluation_vanishes && extra_ok, r.exponent.has_value());
    return out;
}

CheckOutcome run_unipotent(const Json& p) {
    CheckOutcome out;
    GroupSpec g = group_param(p, out);
    auto u = unipotent_reduced_check(g, p.at("power_bound").get<unsigned>());
    const bool audit = u.audit();
    out.result = {{"group", u.group},
                  {"carrier", u.carrier},
                  {"function_ring_dim", u.function_ring_dim ? Json(u.function_ring_dim) : Json("infinite")},
                  {"extended_j", u.extended_j},
                  {"identity_ideal", u.identity_ideal},
                  {"j_in_ie", u.j_in_ie.empty() ? certs(u.j_in_ie_alg) : certs(u.j_in_ie)},
                  {"ie_in_radical", u.ie_in_radical.empty() ? certs(u.ie_in_radical_alg) : certs(u.ie_in_radical)},
                  {"radical_powers", u.radical_powers},
                  {"power_bound", u.power_bound},
                  {"ie_maximal", u.ie_maximal},
                  {"separable", u.separable ? Json(*u.separable) : Json(nullptr)},
                  {"zero_set", u.zero_set},
                  {"holds", u.holds},
                  {"audit", audit},
                  {"note", "radical membership is bounded-power membership up to power_bound"}};
    out.status = u.holds && audit ? Status::Pass : Status::Fail;
    return out;
}

// ---------------------------------------------------------------- cech checks

CheckOutcome run_cech(const Json& p) {
    CheckOutcome out;
    GroupSpec g = group_param(p, out);
    const unsigned D = p.at("max_degree").get<unsigned>(), M = p.at("truncation").get<unsigned>();
    if (D >= M) throw UsageError("cech: --max-degree must be below --truncation");
    auto h = hopf_from_group(g);
    double top = 1;
    for (unsigned i = 0; i < M; ++i) top *= static_cast<double>(h.dim());
    if (top > 50000) throw UsageError("cech: top level would have dimension above 50000");
    auto cs = cech_nerve(h, M);
    auto r = normalized_cohomology(cs, D);
    Json h0 = Json::array();
    for (const auto& v : r.h0_basis) h0.push_back(vec(v));
    bool higher_vanish = true;
    for (std::size_t k = 1; k < r.h_dims.size(); ++k) higher_vanish = higher_vanish && r.h_dims[k] == 0;
    out.result = {{"hopf_algebra", h.name},
                  {"hopf_dim", h.dim()},
                  {"level_dims", r.level_dims},
                  {"normalized_dims", r.normalized_dims},
                  {"predicted_normalized_dims", r.predicted_normalized_dims},
                  {"h_dims", r.h_dims},
                  {"h0_basis", h0},
                  {"equalizer_dim", r.equalizer_dim},
                  {"genuine_dim", r.genuine_dim},
                  {"differential_squares_to_zero", r.squares_to_zero},
                  {"cosimplicial_identities", true},
                  {"note", "each level is finite etale, so its HH is its function algebra"}};
    const bool pass = r.h_dims[0] == 1 && higher_vanish && r.equalizer_dim == r.h_dims[0] &&
                      r.normalized_dims == r.predicted_normalized_dims && r.squares_to_zero;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

CheckOutcome run_descent_gap(const Json& p) {
    CheckOutcome out;
    GroupSpec g = group_param(p, out);
    auto d = descent_gap(g);
    bool higher = true;
    for (std::size_t k = 1; k < d.h_dims.size(); ++k) higher = higher && d.h_dims[k] == 0;
    out.result = {{"n", d.n},
                  {"genuine", d.genuine},
                  {"totalization", d.totalization},
                  {"completed", d.completed},
                  {"triple", {d.genuine, d.totalization, d.completed}},
                  {"h_dims", d.h_dims},
                  {"gap", d.gap},
                  {"reconciled", d.reconciled}};
    const bool pass = d.reconciled && d.gap == (d.n >= 2) && higher && d.genuine == d.n;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

// ---------------------------------------------------------------- graded shadow

CheckOutcome run_counterexample(const Json& p) {
    const unsigned N = p.at("degree").get<unsigned>(), P = p.at("precision").get<unsigned>();
    CheckOutcome out;
    auto hh = hh_dual_numbers(N);
    auto bar = hh_bar_complex(shadow_base_algebra(ShadowBase::DualNumbers), std::min(N, 4u));
    bool agree = true;
    for (const auto& [k, d] : bar) agree = agree && hh.at(k) == d;
    auto top = bga_shadow(ShadowBase::DualNumbers, N, P);
    auto ctl = bga_shadow(ShadowBase::Rationals, N, P);
    auto defect = pullback_defect(N);
    auto control = pullback_defect(N, ShadowBase::Rationals);
    Json hhj = Json::array(), barj = Json::array();
    for (const auto& [k, d] : hh) hhj.push_back(d);
    for (const auto& [k, d] : bar) barj.push_back(d);
    Json corners = Json::array();
    bool injective = true;
    for (std::size_t i = 0; i < top.degrees.size(); ++i) {
        const auto& a = top.degrees[i];
        const auto& b = ctl.degrees[i];
        injective = injective && a.inclusion_kernel == 0 && b.inclusion_kernel == 0;
        corners.push_back({{"degree", a.degree},
                           {"coefficient_dim", a.coefficient_dim},
                           {"poly_eps", a.polynomial_rank},
                           {"series_eps", a.series_rank},
                           {"poly_q", b.polynomial_rank},
                           {"series_q", b.series_rank},
                           {"inclusion_kernel", a.inclusion_kernel}});
    }
    Json wit = Json::array();
    bool valid = true;
    for (const auto& w : defect.witnesses) {
        valid = valid && w.validate();
        wit.push_back({{"degree", w.degree},
                       {"series", w.series.to_string()},
                       {"coefficient_dim", w.coefficient_dim},
                       {"control_image_rank", w.control_image_rank},
                       {"first_coefficients", vec(w.series.expand(5))},
                       {"valid", w.validate()}});
    }
    out.result = {{"hh_dual_numbers", hhj},
                  {"hh_bar_oracle", barj},
                  {"hh_agree", agree},
                  {"shared_summand", top.shared_summand},
                  {"corners", corners},
                  {"inclusions_injective", injective},
                  {"witnesses", wit},
                  {"control_cartesian", control.cartesian},
                  {"square_cartesian", defect.cartesian},
                  {"scope", defect.scope_note}};
    const bool pass = agree && valid && defect.witnesses.size() == N && control.cartesian && injective;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

// ---------------------------------------------------------------- property self-audit

Poly random_poly(std::mt19937_64& rng, const RingPtr& R, int max_degree, int terms) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
    Poly p(R);
    for (int t = 0; t < terms; ++t) {
        Monomial m(R->nvars(), 0);
        for (int k = deg(rng); k > 0; --k) ++m[var(rng)];
        int c = coef(rng);
        p.add_term(m, c ? c : 1);
    }
    return p;
}

CheckOutcome run_properties(const Json& p) {
    const int ideals = p.at("ideals").get<int>();
    const std::uint64_t seed = seed_from_env();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nv(1, 3), ng(1, 3), nt(1, 3);
    int gb_ok = 0, member_ok = 0, probes = 0;
    for (int trial = 0; trial < ideals; ++trial) {
        const int n = nv(rng);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        auto R = make_ring(names);
        std::vector<Poly> gens;
        for (int i = ng(rng); i > 0; --i) gens.push_back(random_poly(rng, R, 3, nt(rng)));
        auto gb = groebner_basis(IdealGens(R, gens), TermOrder::grevlex(n));
        if (gb.satisfies_buchberger() && gb.contains_source()) ++gb_ok;
        // a combination of generators must come back with a valid certificate
        Poly f(R);
        for (const auto& g : gens) f += random_poly(rng, R, 2, 2) * g;
        auto c = member_via(gb, f);
        ++probes;
        if (c && c->validate()) ++member_ok;
    }
    // series identity
    const std::vector<std::string> uv{"u"};
    auto u = TruncSeries::variable(uv, 10);
    auto one = TruncSeries::constant(uv, 10, 1);
    const bool exp_log = series_exp(series_log(one + u)) == one + u;
    // cosimplicial identities
    bool cosimplicial = true;
    for (const char* g : {"mu3", "c2"}) cosimplicial = cosimplicial && !cech_nerve(hopf_from_group(parse_group_spec(g)), 3).identity_failure();
    // precision tower coherence
    auto L = make_ring({"x", "y"}, RingMode::Laurent);
    Poly x = Poly::variable(L, 0), y = Poly::variable(L, 1), o = Poly::constant(L, 1);
    IdealGens I(L, {x - o, y - o});
    auto high = complete_truncated(I, 3);
    bool tower = true;
    std::uniform_int_distribution<int> cc(-3, 3);
    for (int m = 0; m <= 3; ++m) {
        auto low = complete_truncated(I, m);
        auto pm = lowering_map(high, low);
        tower = tower && pm.rank() == low.dim();
        for (int k = 0; k < 4; ++k) {
            Vector a(high.dim()), b(high.dim());
            for (auto& v : a) v = cc(rng);
            for (auto& v : b) v = cc(rng);
            tower = tower && pm.apply(high.algebra.multiply(a, b)) == low.algebra.multiply(pm.apply(a), pm.apply(b));
        }
    }
    // certificate audits
    auto cg = containment_exponent(rep_ring(parse_group_spec("gm")), rep_ring(parse_group_spec("sl2")), 4);
    bool audit = cg.audit();
    auto tampered = cg;
    if (!tampered.forward.empty()) {
        tampered.forward[0].coefficients[0] += Poly::constant(tampered.h->ring, 1);
        audit = audit && !tampered.audit();
    }
    CheckOutcome out;
    out.result = {{"seed", std::to_string(seed)},
                  {"groebner_ideals", ideals},
                  {"groebner_sound", gb_ok},
                  {"membership_certified", member_ok},
                  {"membership_probes", probes},
                  {"exp_log_identity", exp_log},
                  {"cosimplicial_identities", cosimplicial},
                  {"precision_tower_coherent", tower},
                  {"certificate_audit_detects_tampering", audit}};
    const bool pass = gb_ok == ideals && member_ok == probes && exp_log && cosimplicial && tower && audit;
    out.status = pass ? Status::Pass : Status::Fail;
    return out;
}

ParamSpec int_param(std::string name, long dflt, long lo, long hi, std::string help) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = Kind::Int;
    p.default_value = dflt;
    p.min = lo;
    p.max = hi;
    p.help = std::move(help);
    return p;
}

ParamSpec str_param(std::string name, Json dflt, std::string help, std::vector<std::string> choices = {}) {
    ParamSpec p;
    p.name = std::move(name);
    p.kind = Kind::String;
    p.default_value = std::move(dflt);
    p.help = std::move(help);
    p.choices = std::move(choices);
    return p;
}

std::vector<CheckDescriptor> build_registry() {
    std::vector<CheckDescriptor> r;
    r.push_back({"adams", "exact-algebra",
                 "psi_l(log(1+u)^j) = l^j log(1+u)^j; {log(1+u)^j} triangular in u; psi_2 eigenvectors are constants",
                 "Adams eigen-equation on the completed series, triangularity, and the psi_2 eigenproblem",
                 {int_param("precision", 12, 0, 40, "series precision"),
                  int_param("max_power", 6, 0, 12, "largest j"),
                  int_param("window", 6, 1, 12, "Laurent exponent window for psi_2"),
                  str_param("ells", "2,3,5", "comma-separated l values")},
                 run_adams});
    r.push_back({"bgm-k", "completion-engine",
                 "Z[x,1/x] completed at (x-1) is Z[[u]], x = 1+u, truncated at u^(N+1)",
                 "completion of the Laurent ring at x - 1",
                 {int_param("precision", 8, 0, 40, "truncation N")},
                 run_bgm_k});
    r.push_back({"bmun", "completion-engine",
                 "Q[t]/(t^n-1) has an augmentation-local factor Q on which t = 1",
                 "idempotent splitting of the cyclic group algebra",
                 {int_param("n_min", 2, 1, 64, "smallest n"), int_param("n_max", 12, 1, 64, "largest n")},
                 run_bmun});
    r.push_back({"cech", "cech-descent",
                 "H^0 of the Cech totalization of pt -> BG is Q and H^1 = H^2 = 0",
                 "normalized cohomology of the Cech nerve of a finite group scheme",
                 {str_param("group", nullptr, "mu<n>, a bundled name or a group file"),
                  int_param("max_degree", 2, 0, 6, "largest cohomological degree"),
                  int_param("truncation", 4, 2, 8, "top cosimplicial level")},
                 run_cech});
    r.push_back({"change-of-groups", "completion-engine",
                 "I_H^n in res(I_G) R(H) in I_H",
                 "least exponent comparing the restricted augmentation ideal with I_H",
                 {str_param("pair", nullptr, "subgroup pair", {"mu_n-gm", "t1-sl2", "t2-gl2"}),
                  int_param("max_exponent", 6, 1, 12, "search bound"),
                  int_param("max_n", 6, 2, 12, "largest n for mu_n-gm")},
                 run_change_of_groups});
    r.push_back({"complete", "completion-engine", "R/I^(N+1) with basis and structure constants",
                 "truncated I-adic completion of a (Laurent) polynomial ring",
                 {str_param("ring", nullptr, "poly:x,y | laurent:x,y | JSON {\"vars\":[..],\"laurent\":bool}"),
                  str_param("ideal", nullptr, "comma-separated generators or a JSON list"),
                  str_param("relations", "", "extra relations, same syntax"),
                  int_param("precision", 4, 0, 24, "truncation N")},
                 run_complete});
    r.push_back({"counterexample", "graded-shadow",
                 "HH(Q[e]) = Q^2, Q, Q, ...; the polynomial/series square over Q[e] -> Q is not cartesian",
                 "module-level shadow of the non-cartesian comparison square",
                 {int_param("degree", 4, 1, 12, "degree bound N"), int_param("precision", 3, 0, 24, "x-adic precision P")},
                 run_counterexample});
    r.push_back({"descent-gap", "cech-descent", "class functions of mu_n (dim n) vs Cech H^0 (dim 1) vs completion (dim 1)",
                 "descent failure for mu_n and its repair by completion",
                 {str_param("group", nullptr, "mu<n>")},
                 run_descent_gap});
    r.push_back({"koszul-check", "completion-engine", "Koszul node modulo I^(N+1) equals R/I^(N+1) for a regular sequence",
                 "degree-0 comparison of the Koszul cube with the adic truncation",
                 {int_param("vars", 2, 1, 4, "number of variables"), int_param("precision", 4, 0, 10, "truncation N")},
                 run_koszul});
    r.push_back({"properties", "cli-report", "seeded property self-audit", "Groebner soundness, identities and certificate audits",
                 {int_param("ideals", 100, 0, 1000, "random ideals")},
                 run_properties});
    r.push_back({"split", "completion-engine", "orthogonal idempotents summing to 1, one per coprime factor",
                 "idempotent splitting of a finite commutative algebra",
                 {str_param("algebra", nullptr, "mu<n>, a polynomial in t, a coefficient list, or a JSON descriptor")},
                 run_split});
    r.push_back({"trace", "trace-class-functions", "tr: R(G) -> O(G)^G is a ring map and e^* tr = dim",
                 "trace of one representation-ring element",
                 {str_param("group", nullptr, "group spec"),
                  str_param("element", nullptr, "JSON {regular|character|coords|distinguished|poly} or a polynomial")},
                 run_trace});
    r.push_back({"trace-radical", "trace-class-functions", "J_G^n in tr(I_G) O(G)^G in J_G",
                 "radical comparison between the traced augmentation ideal and the unit ideal",
                 {str_param("group", nullptr, "group spec"), int_param("max_exponent", 3, 1, 8, "search bound")},
                 run_trace_radical});
    r.push_back({"unipotent-check", "trace-class-functions", "rad(J_G O(G)) = I_e for G finite-by-torus",
                 "reduced unipotent locus is the identity",
                 {str_param("group", nullptr, "group spec"), int_param("power_bound", 4, 1, 16, "radical power bound")},
                 run_unipotent});
    return r;
}

}  // namespace

const std::vector<CheckDescriptor>& check_registry() {
    static const std::vector<CheckDescriptor> r = build_registry();
    return r;
}

}  // namespace astk
