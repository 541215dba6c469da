#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "pelltriples/classgroup.hpp"
#include "pelltriples/errors.hpp"
#include "pelltriples/intkernel.hpp"
#include "pelltriples/lambdasieve.hpp"
#include "pelltriples/pell.hpp"
#include "pelltriples/scan.hpp"
#include "pelltriples/triplegroup.hpp"

namespace pelltriples::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad usage or malformed input: exit code 2, as opposed to domain failures.
struct ArgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: pelltriples <command> [options]\n"
    "\n"
    "commands:\n"
    "  pell <m> [--power n]            least solution of a^2 - m b^2 = 1, and\n"
    "                                  of the -1 equation when it exists\n"
    "  cf <m> [--convergents N]        continued fraction of sqrt(m)\n"
    "  group add <m> <t1> <t2>         compose two triples\n"
    "  group neg <m> <t>               invert a triple\n"
    "  group mul <m> <t> --k K         K-fold sum of a triple\n"
    "  group order <m> <t>             order of a triple\n"
    "  lambda <m> --limit B [--criterion direct|splitting] [--witness] [--jobs N]\n"
    "  class <m> [--number | --map x,y,z | --represents c]\n"
    "  torsion certify <m> <x,y,z>     order-2 certificate for a triple\n"
    "  scan table [--max-s S]          certified table rows (m > c)\n"
    "  scan candidates [--max-s S]     every scan candidate, unfiltered\n"
    "\n"
    "triples are written x,y,z in decimal\n"
    "global options:\n"
    "  --timeout-factor-ms N           give up factoring after N milliseconds\n"
    "                                  (env PELLTRIPLES_TIMEOUT_FACTOR_MS; the\n"
    "                                  command line wins)\n";

std::string to_s(const Int& v) { return v.get_str(); }

json triple_json(const PrimitiveTriple& t) {
    return json::array({to_s(t.x), to_s(t.y), to_s(t.z)});
}

json form_json(const QuadForm& f) {
    return json::array({to_s(f.a), to_s(f.b), to_s(f.c)});
}

json cert_json(const TorsionCertificate& cert) {
    json doc;
    doc["triple"] = triple_json(cert.triple);
    doc["negativePell"] = cert.negative_pell_check;
    doc["doubling"] = triple_json(cert.doubling);
    doc["evidence"] = evidence_name(cert.evidence);
    return doc;
}

std::string line(const json& doc) { return doc.dump() + "\n"; }

Int parse_int(const std::string& text, const char* what) {
    Int v;
    if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
        throw ArgError(std::string(what) + ": expected a decimal integer, got '" + text + "'");
    return v;
}

unsigned long parse_count(const std::string& text, const char* what, unsigned long least) {
    Int v = parse_int(text, what);
    if (v < least || !v.fits_ulong_p())
        throw ArgError(std::string(what) + ": out of range: '" + text + "'");
    return v.get_ui();
}

std::optional<std::string> take_option(std::vector<std::string>& toks, const std::string& name) {
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i] != name) continue;
        if (i + 1 >= toks.size()) throw ArgError(name + " requires a value");
        std::string value = toks[i + 1];
        toks.erase(toks.begin() + i, toks.begin() + i + 2);
        return value;
    }
    return std::nullopt;
}

bool take_flag(std::vector<std::string>& toks, const std::string& name) {
    for (auto it = toks.begin(); it != toks.end(); ++it) {
        if (*it == name) {
            toks.erase(it);
            return true;
        }
    }
    return false;
}

// All options must have been consumed by now.
void expect_positionals(const std::vector<std::string>& toks, std::size_t count,
                        const char* what) {
    for (const auto& t : toks)
        if (t.rfind("--", 0) == 0) throw ArgError("unknown option " + t);
    if (toks.size() != count)
        throw ArgError(std::string("expected ") + what);
}

FactorConfig factor_config(std::vector<std::string>& toks) {
    FactorConfig config;
    if (auto v = take_option(toks, "--timeout-factor-ms")) {
        config.timeout_ms = static_cast<long>(parse_count(*v, "--timeout-factor-ms", 0));
    } else if (const char* env = std::getenv("PELLTRIPLES_TIMEOUT_FACTOR_MS")) {
        config.timeout_ms =
            static_cast<long>(parse_count(env, "PELLTRIPLES_TIMEOUT_FACTOR_MS", 0));
    }
    return config;
}

PrimitiveTriple parse_triple(const GroupContext& ctx, const std::string& text) {
    std::array<Int, 3> raw = parse_csv_triple(text);
    return normalize(ctx, raw[0], raw[1], raw[2]);
}

std::string cmd_pell(std::vector<std::string> toks, const FactorConfig& config) {
    auto power = take_option(toks, "--power");
    expect_positionals(toks, 1, "pell <m>");
    GroupContext ctx(parse_int(toks[0], "m"), config);
    const PellFundamental& fund = ctx.fundamental();
    json doc;
    if (power) {
        auto [a, b] = pell_power(fund, parse_count(*power, "--power", 1));
        doc["a"] = to_s(a);
        doc["b"] = to_s(b);
    } else {
        doc["a"] = to_s(fund.a);
        doc["b"] = to_s(fund.b);
        if (fund.negative) {
            doc["negative"] = {{"a", to_s(fund.negative->first)},
                               {"b", to_s(fund.negative->second)}};
        } else {
            doc["negative"] = nullptr;
        }
    }
    return line(doc);
}

std::string cmd_cf(std::vector<std::string> toks) {
    auto count = take_option(toks, "--convergents");
    expect_positionals(toks, 1, "cf <m>");
    CFExpansion cf = cf_sqrt(parse_int(toks[0], "m"));
    json doc;
    doc["u0"] = to_s(cf.u0);
    json period = json::array();
    for (const Int& u : cf.period) period.push_back(to_s(u));
    doc["period"] = period;
    if (count) {
        json conv = json::array();
        for (const Convergent& c : convergents(cf, parse_count(*count, "--convergents", 1)))
            conv.push_back({{"h", to_s(c.h)}, {"k", to_s(c.k)}});
        doc["convergents"] = conv;
    }
    return line(doc);
}

std::string cmd_group(std::vector<std::string> toks, const FactorConfig& config) {
    if (toks.empty()) throw ArgError("group requires a verb: add, neg, mul or order");
    std::string verb = toks.front();
    toks.erase(toks.begin());
    std::optional<std::string> k;
    if (verb == "mul") {
        k = take_option(toks, "--k");
        if (!k) throw ArgError("group mul requires --k");
    }

    if (verb == "add") {
        expect_positionals(toks, 3, "group add <m> <t1> <t2>");
        GroupContext ctx(parse_int(toks[0], "m"), config);
        PrimitiveTriple sum =
            add(ctx, parse_triple(ctx, toks[1]), parse_triple(ctx, toks[2]));
        return line(json{{"triple", triple_json(sum)}});
    }
    if (verb == "neg" || verb == "mul" || verb == "order") {
        expect_positionals(toks, 2, "group <verb> <m> <triple>");
        GroupContext ctx(parse_int(toks[0], "m"), config);
        PrimitiveTriple t = parse_triple(ctx, toks[1]);
        if (verb == "neg") return line(json{{"triple", triple_json(neg(ctx, t))}});
        if (verb == "mul")
            return line(json{{"triple", triple_json(scalar_mul(ctx, parse_int(*k, "--k"), t))}});
        switch (order(ctx, t)) {
            case Order::one: return line(json{{"order", "1"}});
            case Order::three: return line(json{{"order", "3"}});
            case Order::infinite: break;
        }
        return line(json{{"order", "infinite"}});
    }
    throw ArgError("unknown group verb '" + verb + "'");
}

json witness_json(const PrimeWitnessTriple& witness) {
    json doc;
    doc["triple"] = triple_json(witness.triple);
    doc["k"] = to_s(witness.k);
    doc["delta"] = witness.delta;
    if (witness.representation) {
        doc["representation"] = json::array(
            {to_s(witness.representation->first), to_s(witness.representation->second)});
    } else {
        doc["representation"] = nullptr;
    }
    return doc;
}

std::string cmd_lambda(std::vector<std::string> toks, const FactorConfig& config) {
    auto limit = take_option(toks, "--limit");
    if (!limit) throw ArgError("lambda requires --limit");
    std::string criterion = take_option(toks, "--criterion").value_or("direct");
    if (criterion != "direct" && criterion != "splitting")
        throw ArgError("--criterion must be direct or splitting");
    bool witness = take_flag(toks, "--witness");
    unsigned jobs = 1;
    if (auto j = take_option(toks, "--jobs"))
        jobs = static_cast<unsigned>(parse_count(*j, "--jobs", 1));
    expect_positionals(toks, 1, "lambda <m> --limit B");
    GroupContext ctx(parse_int(toks[0], "m"), config);
    Int bound = parse_int(*limit, "--limit");

    std::string out;
    if (criterion == "direct") {
        for (const LambdaVerdict& v : lambda_primes(ctx, bound, jobs)) {
            json doc;
            doc["p"] = to_s(v.p);
            doc["legendreM"] = v.legendre_m;
            doc["legendreNegM"] = v.legendre_neg_m;
            doc["rankOdd"] = v.rank_odd;
            if (witness) doc["witness"] = witness_json(triple_from_prime(ctx, v.p));
            out += line(doc);
        }
        return out;
    }
    if (bound < 3) throw ArgError("--limit must be at least 3");
    Int p;
    mpz_nextprime(p.get_mpz_t(), Int(2).get_mpz_t());
    for (; p <= bound; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (!splitting_criterion(ctx, p)) continue;
        json doc;
        doc["p"] = to_s(p);
        doc["criterion"] = "splitting";
        if (witness) doc["witness"] = witness_json(triple_from_prime(ctx, p));
        out += line(doc);
    }
    return out;
}

std::string cmd_class(std::vector<std::string> toks, const FactorConfig& config) {
    auto number = take_flag(toks, "--number");
    auto map = take_option(toks, "--map");
    auto rep = take_option(toks, "--represents");
    if (number + map.has_value() + rep.has_value() > 1)
        throw ArgError("--number, --map and --represents are mutually exclusive");
    expect_positionals(toks, 1, "class <m>");
    Int m = parse_int(toks[0], "m");

    if (rep) {
        Int c = parse_int(*rep, "--represents");
        json doc;
        if (auto xy = represents(c, m))
            doc["solution"] = json::array({to_s(xy->first), to_s(xy->second)});
        else
            doc["solution"] = nullptr;
        return line(doc);
    }
    if (map) {
        GroupContext ctx(m, config);
        return line(json{{"form", form_json(triple_class(ctx, parse_triple(ctx, *map)))}});
    }
    if (number) return line(json{{"classNumber", to_s(class_number(m))}});
    json doc;
    doc["discriminant"] = to_s(discriminant(m).D);
    json forms = json::array();
    for (const QuadForm& f : reduced_forms(m)) forms.push_back(form_json(f));
    doc["classNumber"] = to_s(Int(forms.size()));
    doc["forms"] = forms;
    return line(doc);
}

std::string cmd_torsion(std::vector<std::string> toks, const FactorConfig& config) {
    if (toks.empty() || toks.front() != "certify")
        throw ArgError("torsion requires the certify verb");
    toks.erase(toks.begin());
    expect_positionals(toks, 2, "torsion certify <m> <x,y,z>");
    GroupContext ctx(parse_int(toks[0], "m"), config);
    return line(cert_json(certify_order_two(ctx, parse_triple(ctx, toks[1]))));
}

std::string cmd_scan(std::vector<std::string> toks, const FactorConfig& config) {
    if (toks.empty() || (toks.front() != "table" && toks.front() != "candidates"))
        throw ArgError("scan requires the table or candidates verb");
    std::string verb = toks.front();
    toks.erase(toks.begin());
    std::size_t max_s = 7;
    if (auto s = take_option(toks, "--max-s"))
        max_s = parse_count(*s, "--max-s", 1);
    expect_positionals(toks, 0, "no arguments after the scan verb");

    auto candidate_line = [](const Candidate& cand, const TorsionCertificate* cert) {
        json doc;
        doc["s"] = cand.s;
        doc["m"] = to_s(cand.m);
        doc["a"] = to_s(cand.a);
        doc["b"] = to_s(cand.b);
        doc["c"] = to_s(cand.c);
        doc["mGreaterC"] = cand.satisfies_m_gt_c;
        doc["certificate"] = cert ? cert_json(*cert) : json(nullptr);
        return doc;
    };

    std::string out;
    if (verb == "table") {
        for (const TableRow& row : reproduce_table(max_s, config))
            out += line(candidate_line(row.candidate, &row.certificate));
    } else {
        for (const Candidate& cand : scan_candidates(max_s, config))
            out += line(candidate_line(cand, nullptr));
    }
    return out;
}

}  // namespace

int exit_code(Status status) {
    switch (status) {
        case Status::ok: return 0;
        case Status::error: return 1;
        case Status::invalid: return 2;
    }
    return 1;
}

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    if (args.empty()) {
        result.status = Status::invalid;
        result.diagnostics = kUsage;
        return result;
    }
    if (args[0] == "--help" || args[0] == "help") {
        result.payload = kUsage;
        return result;
    }

    try {
        std::vector<std::string> toks(args.begin() + 1, args.end());
        FactorConfig config = factor_config(toks);
        const std::string& cmd = args[0];
        if (cmd == "pell") result.payload = cmd_pell(std::move(toks), config);
        else if (cmd == "cf") result.payload = cmd_cf(std::move(toks));
        else if (cmd == "group") result.payload = cmd_group(std::move(toks), config);
        else if (cmd == "lambda") result.payload = cmd_lambda(std::move(toks), config);
        else if (cmd == "class") result.payload = cmd_class(std::move(toks), config);
        else if (cmd == "torsion") result.payload = cmd_torsion(std::move(toks), config);
        else if (cmd == "scan") result.payload = cmd_scan(std::move(toks), config);
        else throw ArgError("unknown command '" + cmd + "'");
    } catch (const ArgError& e) {
        result.status = Status::invalid;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const std::invalid_argument& e) {
        result.status = Status::invalid;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

}  // namespace pelltriples::cli
