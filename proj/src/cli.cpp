#include "constakit/cli.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "constakit/code.hpp"
#include "constakit/cyclo.hpp"
#include "constakit/field.hpp"
#include "constakit/oracle.hpp"
#include "constakit/poly.hpp"
#include "constakit/selfdual.hpp"
#include "constakit/text.hpp"

namespace constakit {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Opts {
    std::uint64_t p = 0;
    std::uint32_t s = 1;
    std::string modulus_csv;
    std::string format = "table";
    std::string out_path;

    std::uint64_t m = 0;
    std::string c_token = "1";

    std::uint32_t a = 0;
    std::string scale_token = "1";
    std::string variant = "all";

    std::uint64_t n = 0;
    std::string lambda_token = "1";
    std::string gen_csv;

    std::uint64_t limit = 0;
    std::uint64_t threshold = 1000;
    std::string criterion = "both";

    std::uint32_t distance_cap = 64;
    std::uint64_t max_words = 20000;
    std::uint64_t max_space = 20000;
};

std::vector<std::uint32_t> parse_u32_csv(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string token =
            csv.substr(start, comma == std::string::npos ? csv.size() - start : comma - start);
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            fail(errc::bad_argument, "expected a comma-separated list of integers, got \"" +
                                         csv + "\"");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Field build_field(const Opts& o) {
    if (o.modulus_csv.empty()) return make_field(o.p, o.s);
    return make_field(o.p, o.s, parse_u32_csv(o.modulus_csv));
}

std::string pretty_ints(const std::vector<std::uint32_t>& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i > 0) {
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string join_u32(const std::vector<std::uint32_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

ordered_json envelope(const std::string& command, const Field& f, ordered_json payload) {
    ordered_json field_doc;
    field_doc["p"] = f->p();
    field_doc["s"] = f->s();
    field_doc["q"] = f->q();
    field_doc["modulus"] = f->modulus();
    field_doc["generator"] = f->generator_value();
    ordered_json doc;
    doc["format_version"] = "1";
    doc["command"] = command;
    doc["field"] = std::move(field_doc);
    doc["payload"] = std::move(payload);
    return doc;
}

ordered_json shape_doc(const CodeShape& sh) {
    ordered_json d;
    d["p"] = sh.p;
    d["a"] = sh.a;
    d["m"] = sh.m;
    d["r"] = sh.r;
    d["n"] = sh.n;
    return d;
}

std::string shape_line(const CodeShape& sh) {
    return "n = 2^" + std::to_string(sh.a) + " * " + std::to_string(sh.m) + " * " +
           std::to_string(sh.p) + "^" + std::to_string(sh.r) + " = " + std::to_string(sh.n);
}

void print_field_header(std::ostream& t, const Field& f) {
    t << "field: q = " << f->q() << " (p = " << f->p() << ", s = " << f->s() << ", modulus "
      << join_u32(f->modulus()) << ")\n";
}

ordered_json code_doc(const EnumeratedCode& ec) {
    ordered_json d;
    d["exps"] = ec.exps;
    d["gen"] = format_poly(ec.code.gen());
    d["dim"] = ec.code.dim();
    return d;
}

// ---- command handlers ------------------------------------------------------

int cmd_field_info(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    ordered_json payload;
    payload["kind"] = "field_info";
    payload["generator_digits"] = f->digits(f->generator_value());
    payload["generator_order"] = f->q() - 1;
    if (o.format == "json") {
        sink << envelope("field info", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "modulus (pretty): " << pretty_ints(f->modulus()) << "\n";
    sink << "generator: " << f->generator_value() << " (digits "
         << join_u32(f->digits(f->generator_value())) << ")\n";
    sink << "generator order: " << f->q() - 1 << "\n";
    return 0;
}

int cmd_factor(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt c = parse_element(f, o.c_token);
    FactorList fl = factor_binomial(f, o.m, c);
    ordered_json payload;
    payload["kind"] = "factorization";
    payload["m"] = o.m;
    payload["c"] = format_element(c);
    payload["target"] = format_poly(fl.target);
    ordered_json arr = ordered_json::array();
    for (const auto& [g, mult] : fl.factors) {
        ordered_json row;
        row["poly"] = format_poly(g);
        row["degree"] = g.degree();
        row["multiplicity"] = mult;
        arr.push_back(std::move(row));
    }
    payload["factors"] = std::move(arr);
    if (o.format == "json") {
        sink << envelope("factor", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "target: " << format_poly(fl.target) << "  (" << pretty_poly(fl.target) << ")\n";
    sink << "factors: " << fl.factors.size() << "\n";
    for (const auto& [g, mult] : fl.factors) {
        sink << "  degree " << g.degree() << "  mult " << mult << "  " << format_poly(g) << "  ("
             << pretty_poly(g) << ")\n";
    }
    return 0;
}

int cmd_grid(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt scale = parse_element(f, o.scale_token);
    GridVariant variant = GridVariant::all;
    if (o.variant == "even") variant = GridVariant::even;
    if (o.variant == "odd") variant = GridVariant::odd;
    FactorGrid grid = factor_grid(f, o.a, o.m, scale, variant);

    Poly monic_product = Poly::one(f);
    Poly raw_product = Poly::one(f);
    Felt scale_inv = scale.inv();
    for (std::size_t row = 0; row < grid.entries.size(); ++row) {
        Felt c = scale_inv * grid.alpha.pow(-static_cast<long long>(grid.twist_exponents[row]));
        for (std::size_t i = 0; i < grid.entries[row].size(); ++i) {
            monic_product = monic_product * grid.entries[row][i];
            raw_product = raw_product * grid.base.factors[i].first.substitute_scaled(c);
        }
    }

    ordered_json payload;
    payload["kind"] = "grid";
    payload["a"] = grid.a;
    payload["m"] = grid.m;
    payload["variant"] = o.variant;
    payload["alpha"] = format_element(grid.alpha);
    payload["scale"] = format_element(grid.scale);
    ordered_json base = ordered_json::array();
    for (const auto& [g, mult] : grid.base.factors) base.push_back(format_poly(g));
    payload["base_factors"] = std::move(base);
    payload["twist_exponents"] = grid.twist_exponents;
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < grid.entries.size(); ++k) {
        ordered_json row;
        row["k"] = k + 1;
        row["twist"] = grid.twist_exponents[k];
        ordered_json entries = ordered_json::array();
        for (const auto& g : grid.entries[k]) entries.push_back(format_poly(g));
        row["factors"] = std::move(entries);
        rows.push_back(std::move(row));
    }
    payload["rows"] = std::move(rows);
    payload["target"] = format_poly(grid.target);
    payload["monic_product"] = format_poly(monic_product);
    payload["raw_product"] = format_poly(raw_product);
    if (o.format == "json") {
        sink << envelope("grid", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "a: " << grid.a << "  m: " << grid.m << "  variant: " << o.variant << "\n";
    sink << "alpha: " << format_element(grid.alpha) << " (" << format_element_pow(grid.alpha)
         << ", order " << element_order(grid.alpha) << ")\n";
    sink << "scale: " << format_element(grid.scale) << "\n";
    sink << "base factors of x^" << grid.m << " - 1:\n";
    for (const auto& [g, mult] : grid.base.factors) {
        sink << "  " << format_poly(g) << "  (" << pretty_poly(g) << ")\n";
    }
    for (std::size_t k = 0; k < grid.entries.size(); ++k) {
        sink << "row k=" << k + 1 << " twist " << grid.twist_exponents[k] << ":";
        for (const auto& g : grid.entries[k]) sink << "  " << format_poly(g);
        sink << "\n";
    }
    sink << "target: " << format_poly(grid.target) << "  (" << pretty_poly(grid.target) << ")\n";
    sink << "monic product: " << format_poly(monic_product)
         << (monic_product == grid.target ? "  [= target]" : "  [!= target]") << "\n";
    sink << "raw product: " << format_poly(raw_product)
         << (raw_product == grid.target ? "  [= target]" : "  [differs from target by a unit]")
         << "\n";
    return 0;
}

int cmd_codes_count(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt lam = parse_element(f, o.lambda_token);
    CodeShape shape = shape_decompose(o.n, f->p());
    CodeEnumerator en(f, shape, lam);
    BigUint total = en.total();
    ordered_json payload;
    payload["kind"] = "count";
    payload["n"] = o.n;
    payload["lambda"] = format_element(lam);
    payload["shape"] = shape_doc(shape);
    ordered_json degs = ordered_json::array();
    for (const auto& g : en.base()) degs.push_back(g.degree());
    payload["base_degrees"] = std::move(degs);
    payload["count"] = total.to_string();
    if (o.format == "json") {
        sink << envelope("codes count", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "shape: " << shape_line(shape) << "\n";
    sink << "lambda: " << format_element(lam) << "\n";
    sink << "base factors: " << en.base().size() << "\n";
    sink << "count: " << total.to_string() << "\n";
    return 0;
}

// Shared by `codes list` and `codes selfdual list`: how many codes to stream.
std::uint64_t resolve_limit(const Opts& o, const BigUint& total) {
    if (o.limit > 0) return o.limit;
    if (!total.fits_u64() || total.as_u64() > o.threshold) {
        fail(errc::too_large, "enumeration of " + total.to_string() +
                                  " codes requires --limit (threshold " +
                                  std::to_string(o.threshold) + ")");
    }
    return total.as_u64();
}

int cmd_codes_list(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt lam = parse_element(f, o.lambda_token);
    CodeShape shape = shape_decompose(o.n, f->p());
    CodeEnumerator en(f, shape, lam);
    BigUint total = en.total();
    std::uint64_t cap = resolve_limit(o, total);

    ordered_json payload;
    payload["kind"] = "code_list";
    payload["n"] = o.n;
    payload["lambda"] = format_element(lam);
    payload["shape"] = shape_doc(shape);
    ordered_json base = ordered_json::array();
    for (const auto& g : en.base()) base.push_back(format_poly(g));
    payload["base_factors"] = std::move(base);
    payload["total"] = total.to_string();
    ordered_json codes = ordered_json::array();
    std::uint64_t listed = 0;
    while (listed < cap) {
        auto ec = en.next();
        if (!ec) break;
        codes.push_back(code_doc(*ec));
        ++listed;
    }
    payload["listed"] = listed;
    payload["codes"] = std::move(codes);
    if (o.format == "json") {
        sink << envelope("codes list", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "shape: " << shape_line(shape) << "\n";
    sink << "lambda: " << format_element(lam) << "\n";
    sink << "total: " << total.to_string() << "  listed: " << listed << "\n";
    for (const auto& row : payload["codes"]) {
        sink << "  exps [";
        const auto& exps = row["exps"];
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i > 0) sink << ",";
            sink << exps[i].get<std::uint64_t>();
        }
        sink << "]  dim " << row["dim"].get<std::uint64_t>() << "  gen "
             << row["gen"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_codes_dual(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt lam = parse_element(f, o.lambda_token);
    Poly gen = parse_poly(f, o.gen_csv);
    ConstaCode c = make_code(f, o.n, lam, gen);
    ConstaCode d = dual(c);
    ordered_json payload;
    payload["kind"] = "dual";
    payload["n"] = o.n;
    payload["lambda"] = format_element(lam);
    payload["gen"] = format_poly(c.gen());
    payload["dim"] = c.dim();
    payload["dual_lambda"] = format_element(d.lam());
    payload["dual_gen"] = format_poly(d.gen());
    payload["dual_dim"] = d.dim();
    payload["self_dual"] = is_self_dual(c);
    if (o.format == "json") {
        sink << envelope("codes dual", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "code: n = " << o.n << "  lambda = " << format_element(lam) << "  dim = " << c.dim()
         << "\n";
    sink << "gen: " << format_poly(c.gen()) << "  (" << pretty_poly(c.gen()) << ")\n";
    sink << "dual lambda: " << format_element(d.lam()) << "\n";
    sink << "dual gen: " << format_poly(d.gen()) << "  (" << pretty_poly(d.gen()) << ")\n";
    sink << "dual dim: " << d.dim() << "\n";
    sink << "self-dual: " << (is_self_dual(c) ? "yes" : "no") << "\n";
    return 0;
}

ordered_json verdict_doc(const ExistenceVerdict& v, bool structural) {
    ordered_json d;
    d["exists"] = v.exists;
    if (structural) {
        if (v.witness) {
            d["witness_gen"] = format_poly(v.witness->gen());
            d["witness_dim"] = v.witness->dim();
        }
        ordered_json obs = ordered_json::array();
        for (const auto& g : v.obstruction) obs.push_back(format_poly(g));
        d["obstruction"] = std::move(obs);
    } else if (v.ord_m_q) {
        d["ord_m_q"] = *v.ord_m_q;
    }
    return d;
}

int cmd_selfdual_exists(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    CodeShape shape = shape_decompose(o.n, f->p());
    ordered_json payload;
    payload["kind"] = "selfdual_exists";
    payload["n"] = o.n;
    payload["shape"] = shape_doc(shape);
    payload["criterion"] = o.criterion;
    int exit_code = 0;
    std::string verdict_line;
    if (o.criterion == "structural") {
        ExistenceVerdict v = selfdual_exists_structural(f, shape);
        payload["structural"] = verdict_doc(v, true);
        verdict_line = std::string("structural: ") + (v.exists ? "exists" : "does not exist");
    } else if (o.criterion == "paper") {
        ExistenceVerdict v = selfdual_exists_paper(f, shape);
        payload["paper"] = verdict_doc(v, false);
        verdict_line = std::string("order-parity: ") + (v.exists ? "exists" : "does not exist");
    } else {
        ConsistencyReport rep = consistency_report(f, shape);
        payload["structural"] = verdict_doc(rep.structural, true);
        payload["paper_applicable"] = rep.paper_applicable;
        if (rep.paper) payload["paper"] = verdict_doc(*rep.paper, false);
        std::string verdict = "NOT_APPLICABLE";
        if (rep.agree) verdict = *rep.agree ? "AGREE" : "DISAGREE";
        payload["verdict"] = verdict;
        payload["oracle_checked"] = rep.oracle_checked;
        if (rep.oracle_checked) payload["oracle_confirms"] = rep.oracle_confirms;
        verdict_line = "verdict: " + verdict;
        if (verdict == "DISAGREE") exit_code = 2;
    }
    if (o.format == "json") {
        sink << envelope("codes selfdual exists", f, payload).dump(2) << "\n";
        return exit_code;
    }
    print_field_header(sink, f);
    sink << "shape: " << shape_line(shape) << "\n";
    if (payload.contains("structural")) {
        const auto& st = payload["structural"];
        sink << "structural: " << (st["exists"].get<bool>() ? "exists" : "does not exist") << "\n";
        if (st.contains("witness_gen")) {
            sink << "  witness gen: " << st["witness_gen"].get<std::string>() << "  (dim "
                 << st["witness_dim"].get<std::uint64_t>() << ")\n";
        }
        for (const auto& g : st["obstruction"]) {
            sink << "  obstruction (self-reciprocal factor): " << g.get<std::string>() << "\n";
        }
    }
    if (payload.contains("paper")) {
        const auto& pp = payload["paper"];
        sink << "order-parity: " << (pp["exists"].get<bool>() ? "exists" : "does not exist");
        if (pp.contains("ord_m_q")) sink << "  (ord = " << pp["ord_m_q"].get<std::uint64_t>() << ")";
        sink << "\n";
    }
    if (payload.contains("paper_applicable") && !payload["paper_applicable"].get<bool>()) {
        sink << "order-parity: hypothesis not applicable to this shape\n";
    }
    if (payload.contains("oracle_checked") && payload["oracle_checked"].get<bool>()) {
        sink << "oracle: " << (payload["oracle_confirms"].get<bool>() ? "confirms" : "REFUTES")
             << " the structural witness\n";
    }
    sink << verdict_line << "\n";
    return exit_code;
}

int cmd_selfdual_list(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    CodeShape shape = shape_decompose(o.n, f->p());
    SelfDualEnumerator en(f, shape);
    BigUint total = en.total();
    std::uint64_t cap = resolve_limit(o, total);
    const PairClassification& cls = en.classification();

    ordered_json payload;
    payload["kind"] = "selfdual_list";
    payload["n"] = o.n;
    payload["shape"] = shape_doc(shape);
    ordered_json selfrec = ordered_json::array();
    for (const auto& g : cls.self_reciprocal) selfrec.push_back(format_poly(g));
    payload["self_reciprocal"] = std::move(selfrec);
    ordered_json pairs = ordered_json::array();
    for (const auto& [h, hstar] : cls.pairs) {
        pairs.push_back(ordered_json::array({format_poly(h), format_poly(hstar)}));
    }
    payload["pairs"] = std::move(pairs);
    payload["total"] = total.to_string();
    ordered_json codes = ordered_json::array();
    std::uint64_t listed = 0;
    while (listed < cap) {
        auto ec = en.next();
        if (!ec) break;
        codes.push_back(code_doc(*ec));
        ++listed;
    }
    payload["listed"] = listed;
    payload["codes"] = std::move(codes);
    if (o.format == "json") {
        sink << envelope("codes selfdual list", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "shape: " << shape_line(shape) << "\n";
    sink << "self-reciprocal factors: " << cls.self_reciprocal.size() << "\n";
    for (const auto& g : cls.self_reciprocal) sink << "  " << format_poly(g) << "\n";
    sink << "reciprocal pairs: " << cls.pairs.size() << "\n";
    for (const auto& [h, hstar] : cls.pairs) {
        sink << "  " << format_poly(h) << "  |  " << format_poly(hstar) << "\n";
    }
    sink << "total: " << total.to_string() << "  listed: " << listed << "\n";
    for (const auto& row : payload["codes"]) {
        sink << "  exps [";
        const auto& exps = row["exps"];
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i > 0) sink << ",";
            sink << exps[i].get<std::uint64_t>();
        }
        sink << "]  dim " << row["dim"].get<std::uint64_t>() << "  gen "
             << row["gen"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_codes_equiv(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt lam = parse_element(f, o.lambda_token);
    Poly gen = parse_poly(f, o.gen_csv);
    ConstaCode c = make_code(f, o.n, lam, gen);
    auto eq = cyclic_equivalent(c);
    ordered_json payload;
    payload["kind"] = "equiv";
    payload["n"] = o.n;
    payload["lambda"] = format_element(lam);
    payload["gen"] = format_poly(c.gen());
    payload["exists"] = static_cast<bool>(eq);
    if (eq) {
        payload["delta"] = format_element(eq->map.delta);
        auto dl = f->dlog(eq->map.delta.value());
        if (dl) payload["delta_dlog"] = *dl;
        payload["cyclic_gen"] = format_poly(eq->cyclic.gen());
        payload["cyclic_dim"] = eq->cyclic.dim();
    }
    if (o.format == "json") {
        sink << envelope("codes equiv", f, payload).dump(2) << "\n";
        return 0;
    }
    print_field_header(sink, f);
    sink << "code: n = " << o.n << "  lambda = " << format_element(lam) << "  gen "
         << format_poly(c.gen()) << "\n";
    if (!eq) {
        sink << "equivalent cyclic code: none (lambda has no n-th root)\n";
        return 0;
    }
    sink << "delta: " << format_element(eq->map.delta) << " (" << format_element_pow(eq->map.delta)
         << ")\n";
    sink << "cyclic gen: " << format_poly(eq->cyclic.gen()) << "  ("
         << pretty_poly(eq->cyclic.gen()) << ")\n";
    return 0;
}

int cmd_verify(const Opts& o, std::ostream& sink) {
    Field f = build_field(o);
    Felt lam = parse_element(f, o.lambda_token);
    Poly gen = parse_poly(f, o.gen_csv);
    ConstaCode c = make_code(f, o.n, lam, gen);
    OracleBounds bounds{o.max_words, o.max_space};

    struct CheckRow {
        std::string name;
        std::string status;
        std::string detail;
    };
    std::vector<CheckRow> checks;
    auto record = [&checks](const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass ? "pass" : "fail", detail});
    };

    std::optional<CodewordSet> words;
    try {
        words = codeword_set(c, bounds);
    } catch (const error& e) {
        if (e.code() != errc::too_large) throw;
    }

    if (words) {
        record("shift_closure", check_shift_closure(*words, c.lam()));
    } else {
        checks.push_back({"shift_closure", "skipped", "codeword set exceeds --max-words"});
    }

    ConstaCode d = dual(c);
    record("dual_dimension", c.dim() + d.dim() == c.n(),
           std::to_string(c.dim()) + " + " + std::to_string(d.dim()) + " = " +
               std::to_string(c.n()));
    record("double_dual", dual(d) == c);

    if (words) {
        std::optional<CodewordSet> dual_words;
        try {
            dual_words = codeword_set(d, bounds);
        } catch (const error& e) {
            if (e.code() != errc::too_large) throw;
        }
        if (dual_words) {
            CodewordSet brute = bruteforce_dual(*words, bounds);
            record("bruteforce_dual", brute.words == dual_words->words);
        } else {
            checks.push_back({"bruteforce_dual", "skipped", "dual set exceeds --max-words"});
        }
    } else {
        checks.push_back({"bruteforce_dual", "skipped", "codeword set exceeds --max-words"});
    }

    bool poly_sd = is_self_dual(c);
    bool matrix_sd = check_matrix_selfdual(generator_matrix(c));
    record("selfdual_consistency", poly_sd == matrix_sd,
           std::string("generator test ") + (poly_sd ? "yes" : "no") + ", matrix test " +
               (matrix_sd ? "yes" : "no"));

    MinDistanceResult dist = min_distance(c, o.distance_cap, bounds);
    std::string dist_kind;
    switch (dist.kind) {
        case MinDistanceResult::Kind::exact: dist_kind = "exact"; break;
        case MinDistanceResult::Kind::at_most: dist_kind = "at_most"; break;
        case MinDistanceResult::Kind::above_cap: dist_kind = "above_cap"; break;
        case MinDistanceResult::Kind::unbounded: dist_kind = "unbounded"; break;
    }

    bool all_pass = true;
    for (const auto& row : checks) {
        if (row.status == "fail") all_pass = false;
    }

    ordered_json payload;
    payload["kind"] = "verify";
    payload["n"] = o.n;
    payload["lambda"] = format_element(lam);
    payload["gen"] = format_poly(c.gen());
    payload["dim"] = c.dim();
    ordered_json rows = ordered_json::array();
    for (const auto& row : checks) {
        ordered_json r;
        r["name"] = row.name;
        r["status"] = row.status;
        if (!row.detail.empty()) r["detail"] = row.detail;
        rows.push_back(std::move(r));
    }
    payload["checks"] = std::move(rows);
    ordered_json dd;
    dd["kind"] = dist_kind;
    dd["value"] = dist.value;
    payload["min_distance"] = std::move(dd);
    payload["all_pass"] = all_pass;

    if (o.format == "json") {
        sink << envelope("verify", f, payload).dump(2) << "\n";
        return all_pass ? 0 : 1;
    }
    print_field_header(sink, f);
    sink << "code: n = " << c.n() << "  lambda = " << format_element(lam) << "  dim = " << c.dim()
         << "\n";
    sink << "gen: " << format_poly(c.gen()) << "\n";
    for (const auto& row : checks) {
        sink << "check " << row.name << ": " << row.status;
        if (!row.detail.empty()) sink << "  (" << row.detail << ")";
        sink << "\n";
    }
    sink << "min distance: " << dist_kind;
    if (dist.kind != MinDistanceResult::Kind::unbounded) sink << " " << dist.value;
    sink << "\n";
    sink << "all checks: " << (all_pass ? "pass" : "FAIL") << "\n";
    return all_pass ? 0 : 1;
}

// Options whose values may start with '-' (negative element tokens, CSV polys);
// fold the value into --name=value so flag parsing cannot eat it.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
    static const std::vector<std::string> value_flags = {"--lambda", "--c", "--scale", "--gen",
                                                         "--modulus"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        bool merged = false;
        for (const auto& name : value_flags) {
            if (args[i] == name && i + 1 < args.size()) {
                out.push_back(name + "=" + args[i + 1]);
                ++i;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(args[i]);
    }
    return out;
}

void add_field_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("--p", o.p, "field characteristic (prime)")->required();
    cmd->add_option("--s", o.s, "extension degree (default 1)");
    cmd->add_option("--modulus", o.modulus_csv,
                    "modulus coefficients over F_p, constant first (default: smallest)");
    cmd->add_option("--format", o.format, "output format (default table)")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", o.out_path, "write output to FILE instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Opts o;
    CLI::App app{"exact arithmetic for repeated-root constacyclic codes"};
    app.require_subcommand(1);

    CLI::App* field_cmd = app.add_subcommand("field", "field inspection");
    field_cmd->require_subcommand(1);
    CLI::App* field_info = field_cmd->add_subcommand("info", "describe F_{p^s}");
    add_field_opts(field_info, o);

    CLI::App* factor_cmd = app.add_subcommand("factor", "factor x^m - c into irreducibles");
    add_field_opts(factor_cmd, o);
    factor_cmd->add_option("--m", o.m, "exponent m (coprime to p)")->required();
    factor_cmd->add_option("--c", o.c_token, "constant c as an element token (default 1)");

    CLI::App* grid_cmd = app.add_subcommand("grid", "twisted factor grid for x^(2^a m) -+ scale^(2^a m)");
    add_field_opts(grid_cmd, o);
    grid_cmd->add_option("--a", o.a, "two-power exponent a")->required();
    grid_cmd->add_option("--m", o.m, "odd part m")->required();
    grid_cmd->add_option("--scale", o.scale_token, "scale element token (default 1)");
    grid_cmd->add_option("--variant", o.variant, "grid variant (default all)")
        ->check(CLI::IsMember({"all", "even", "odd"}));

    CLI::App* codes_cmd = app.add_subcommand("codes", "constacyclic code operations");
    codes_cmd->require_subcommand(1);

    CLI::App* codes_count = codes_cmd->add_subcommand("count", "number of lambda-constacyclic codes");
    add_field_opts(codes_count, o);
    codes_count->add_option("--n", o.n, "code length")->required();
    codes_count->add_option("--lambda", o.lambda_token, "lambda element token (default 1)");

    CLI::App* codes_list = codes_cmd->add_subcommand("list", "enumerate lambda-constacyclic codes");
    add_field_opts(codes_list, o);
    codes_list->add_option("--n", o.n, "code length")->required();
    codes_list->add_option("--lambda", o.lambda_token, "lambda element token (default 1)");
    codes_list->add_option("--limit", o.limit, "list at most this many codes");
    codes_list->add_option("--threshold", o.threshold,
                           "largest total listable without --limit (default 1000)");

    CLI::App* codes_dual = codes_cmd->add_subcommand("dual", "dual of a constacyclic code");
    add_field_opts(codes_dual, o);
    codes_dual->add_option("--n", o.n, "code length")->required();
    codes_dual->add_option("--lambda", o.lambda_token, "lambda element token (default 1)");
    codes_dual->add_option("--gen", o.gen_csv, "generator polynomial, CSV constant first")
        ->required();

    CLI::App* selfdual_cmd = codes_cmd->add_subcommand("selfdual", "self-dual negacyclic codes");
    selfdual_cmd->require_subcommand(1);

    CLI::App* sd_exists = selfdual_cmd->add_subcommand("exists", "existence of self-dual negacyclic codes");
    add_field_opts(sd_exists, o);
    sd_exists->add_option("--n", o.n, "code length")->required();
    sd_exists->add_option("--criterion", o.criterion,
                          "structural (certified), paper (published order-parity rule), or both "
                          "(cross-check, exit 2 on disagreement; default both)")
        ->check(CLI::IsMember({"structural", "paper", "both"}));

    CLI::App* sd_list = selfdual_cmd->add_subcommand("list", "enumerate self-dual negacyclic codes");
    add_field_opts(sd_list, o);
    sd_list->add_option("--n", o.n, "code length")->required();
    sd_list->add_option("--limit", o.limit, "list at most this many codes");
    sd_list->add_option("--threshold", o.threshold,
                        "largest total listable without --limit (default 1000)");

    CLI::App* codes_equiv = codes_cmd->add_subcommand("equiv", "monomially equivalent cyclic code");
    add_field_opts(codes_equiv, o);
    codes_equiv->add_option("--n", o.n, "code length")->required();
    codes_equiv->add_option("--lambda", o.lambda_token, "lambda element token (default 1)");
    codes_equiv->add_option("--gen", o.gen_csv, "generator polynomial, CSV constant first")
        ->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force oracle suite for one code");
    add_field_opts(verify_cmd, o);
    verify_cmd->add_option("--n", o.n, "code length")->required();
    verify_cmd->add_option("--lambda", o.lambda_token, "lambda element token (default 1)");
    verify_cmd->add_option("--gen", o.gen_csv, "generator polynomial, CSV constant first")
        ->required();
    verify_cmd->add_option("--distance-cap", o.distance_cap,
                           "report at_most/above_cap relative to this weight (default 64)");
    verify_cmd->add_option("--max-words", o.max_words,
                           "largest codeword set to materialize (default 20000)");
    verify_cmd->add_option("--max-space", o.max_space,
                           "largest ambient space to scan exhaustively (default 20000)");

    std::vector<std::string> normalized = normalize_args(args);
    try {
        std::vector<std::string> reversed(normalized.rbegin(), normalized.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // usage errors exit 1; --help exits 0; 2 stays reserved for DISAGREE
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "error: cannot open output file " << o.out_path << "\n";
            return 1;
        }
        sink = &file;
    }

    try {
        if (field_cmd->parsed() && field_info->parsed()) return cmd_field_info(o, *sink);
        if (factor_cmd->parsed()) return cmd_factor(o, *sink);
        if (grid_cmd->parsed()) return cmd_grid(o, *sink);
        if (codes_cmd->parsed()) {
            if (codes_count->parsed()) return cmd_codes_count(o, *sink);
            if (codes_list->parsed()) return cmd_codes_list(o, *sink);
            if (codes_dual->parsed()) return cmd_codes_dual(o, *sink);
            if (selfdual_cmd->parsed()) {
                if (sd_exists->parsed()) return cmd_selfdual_exists(o, *sink);
                if (sd_list->parsed()) return cmd_selfdual_list(o, *sink);
            }
            if (codes_equiv->parsed()) return cmd_codes_equiv(o, *sink);
        }
        if (verify_cmd->parsed()) return cmd_verify(o, *sink);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command selected\n";
    return 1;
}

}  // namespace constakit
