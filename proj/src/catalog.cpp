#include "hyperaccel/catalog.hpp"
#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include "hyperaccel/errors.hpp"
#include "hyperaccel/expr.hpp"

namespace hyperaccel {

namespace {

struct Tok {
    std::string text;
    int col; // 1-based
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

// drop the "parse error at L:C: " prefix so expression errors re-anchor at
// their document position instead of nesting two coordinate pairs
std::string strip_parse_prefix(const char* what) {
    std::string s(what);
    const std::string lead = "parse error at ";
    if (s.rfind(lead, 0) == 0) {
        size_t colon = s.find(": ", s.find(':', lead.size()) + 1);
        if (colon != std::string::npos) return s.substr(colon + 2);
    }
    return s;
}

Rat rat_at(const Tok& t, int line) {
    try {
        return parse_rational(t.text);
    } catch (const ParseError& pe) {
        throw ParseError(line, t.col, strip_parse_prefix(pe.what()));
    }
}

long long_at(const Tok& t, int line) {
    try {
        size_t used = 0;
        long v = std::stol(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument(t.text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, t.col, "expected an integer, got '" + t.text + "'");
    }
}

RatFunc ratfunc_at(const std::string& text, int line, int col, const SymbolTable& syms) {
    try {
        return parse_ratfunc(text, syms);
    } catch (const ParseError& pe) {
        throw ParseError(line, col + pe.col - 1, strip_parse_prefix(pe.what()));
    }
}

MultiPoly poly_at(const std::string& text, int line, int col, const SymbolTable& syms) {
    try {
        return parse_poly(text, syms);
    } catch (const ParseError& pe) {
        throw ParseError(line, col + pe.col - 1, strip_parse_prefix(pe.what()));
    }
}

// "pi", "pi^-1", "zeta3^2"
std::pair<Atom, int> atom_at(const Tok& t, int line) {
    std::string name = t.text;
    int exp = 1;
    size_t caret = name.find('^');
    if (caret != std::string::npos) {
        Tok e{name.substr(caret + 1), t.col + static_cast<int>(caret) + 1};
        exp = static_cast<int>(long_at(e, line));
        name = name.substr(0, caret);
    }
    auto a = atom_from_name(name);
    if (!a) throw ParseError(line, t.col, "unknown constant atom '" + name + "'");
    return {*a, exp};
}

} // namespace

const TransformFamily* Catalog::family(const std::string& id) const {
    for (auto& f : families)
        if (f.id == id) return &f;
    return nullptr;
}

const CatalogEntry* Catalog::entry(const std::string& id) const {
    for (auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

Catalog parse_catalog(const std::string& text) {
    Catalog cat;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    bool header = false;
    enum class Ctx { Top, Family, Entry };
    Ctx ctx = Ctx::Top;
    TransformFamily fam;
    CatalogEntry ent;
    ChuSeries disp;
    bool has_display = false, has_kind = false;

    auto tail_from = [&](const Tok& second) { return line.substr(second.col - 1); };

    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        if (!header) {
            if (toks.size() != 2 || toks[0].text != "hyperaccel-catalog" || toks[1].text != "v1")
                throw ParseError(ln, toks[0].col, "expected header 'hyperaccel-catalog v1'");
            header = true;
            continue;
        }
        const std::string& kw = toks[0].text;
        auto need = [&](size_t n) {
            if (toks.size() < n + 1)
                throw ParseError(ln, toks[0].col, "'" + kw + "' needs " + std::to_string(n) + " argument(s)");
        };

        if (ctx == Ctx::Top) {
            if (kw == "family") {
                need(1);
                fam = TransformFamily{};
                fam.id = toks[1].text;
                ctx = Ctx::Family;
            } else if (kw == "entry") {
                need(1);
                ent = CatalogEntry{};
                disp = ChuSeries{};
                has_display = has_kind = false;
                ent.id = toks[1].text;
                ctx = Ctx::Entry;
            } else {
                throw ParseError(ln, toks[0].col, "expected 'family' or 'entry', got '" + kw + "'");
            }
            continue;
        }

        if (ctx == Ctx::Family) {
            if (kw == "section") {
                need(1);
                fam.section = tail_from(toks[1]);
            } else if (kw == "poch") {
                need(2);
                const Tok& last = toks.back();
                int exp = static_cast<int>(long_at(last, ln));
                std::string base = line.substr(toks[1].col - 1, last.col - toks[1].col);
                while (!base.empty() && std::isspace(static_cast<unsigned char>(base.back()))) base.pop_back();
                fam.term.poch.push_back({poly_at(base, ln, toks[1].col, SymbolTable::nkab()), exp});
            } else if (kw == "power") {
                need(1);
                fam.term.power_base = rat_at(toks[1], ln);
            } else if (kw == "prefactor") {
                need(1);
                fam.term.prefactor = ratfunc_at(tail_from(toks[1]), ln, toks[1].col, SymbolTable::nkab());
            } else if (kw == "r") {
                need(1);
                fam.certificate.r = long_at(toks[1], ln);
            } else if (kw == "R") {
                need(1);
                fam.certificate.R = ratfunc_at(tail_from(toks[1]), ln, toks[1].col, SymbolTable::nkab());
            } else if (kw == "p1") {
                need(1);
                fam.certificate.p1 = poly_at(tail_from(toks[1]), ln, toks[1].col, SymbolTable::nkab());
            } else if (kw == "p2") {
                need(1);
                fam.certificate.p2 = poly_at(tail_from(toks[1]), ln, toks[1].col, SymbolTable::nkab());
            } else if (kw == "end") {
                cat.families.push_back(fam);
                ctx = Ctx::Top;
            } else {
                throw ParseError(ln, toks[0].col, "unknown family keyword '" + kw + "'");
            }
            continue;
        }

        // entry block
        if (kw == "family") {
            need(1);
            ent.family_id = toks[1].text;
            has_kind = true;
        } else if (kw == "numeric-only") {
            ent.family_id.clear();
            has_kind = true;
        } else if (kw == "assign") {
            need(3);
            ent.a = rat_at(toks[1], ln);
            ent.b = rat_at(toks[2], ln);
            ent.n0 = rat_at(toks[3], ln);
        } else if (kw == "target") {
            need(1);
            ConstantExpr c;
            c.coefficient = rat_at(toks[1], ln);
            for (size_t i = 2; i < toks.size(); ++i) c.atoms.push_back(atom_at(toks[i], ln));
            c.normalize();
            ent.target.push_back(c);
        } else if (kw == "rate") {
            need(1);
            disp.rate = rat_at(toks[1], ln);
            has_display = true;
        } else if (kw == "upper") {
            for (size_t i = 1; i < toks.size(); ++i) disp.uppers.push_back(rat_at(toks[i], ln));
            has_display = true;
        } else if (kw == "lower") {
            for (size_t i = 1; i < toks.size(); ++i) disp.lowers.push_back(rat_at(toks[i], ln));
            has_display = true;
        } else if (kw == "summand") {
            need(1);
            disp.summand = ratfunc_at(tail_from(toks[1]), ln, toks[1].col, SymbolTable::j_only());
            has_display = true;
        } else if (kw == "start") {
            need(1);
            disp.start_index = long_at(toks[1], ln);
            has_display = true;
        } else if (kw == "shifted") {
            need(2);
            ent.display_shifted = true;
            ent.display_shift = long_at(toks[1], ln);
            ent.display_scale = rat_at(toks[2], ln);
        } else if (kw == "provenance") {
            need(1);
            ent.provenance = tail_from(toks[1]);
        } else if (kw == "end") {
            if (!has_kind)
                throw ParseError(ln, toks[0].col,
                                 "entry " + ent.id + " must state 'family <id>' or 'numeric-only'");
            if (has_display) ent.displayed = disp;
            cat.entries.push_back(ent);
            ctx = Ctx::Top;
        } else {
            throw ParseError(ln, toks[0].col, "unknown entry keyword '" + kw + "'");
        }
    }
    if (ctx != Ctx::Top) throw ParseError(ln, 1, "unterminated block");
    if (!header) throw ParseError(1, 1, "missing header 'hyperaccel-catalog v1'");
    return cat;
}

namespace {

// emitted term j must equal scale * display term (j + shift), exactly
void check_termwise(const CatalogEntry& e, const TransformFamily& fam) {
    SeriesInstance inst{&fam, e.a, e.b, e.n0, 0};
    ChuSeries em;
    try {
        em = emit_chu_style(inst);
    } catch (const NonLinearFactor&) {
        return; // no canonical emission at this assignment; numeric validation still applies
    }
    for (long j = 0; j <= 20; ++j) {
        Rat lhs = chu_term(em, j);
        Rat rhs = e.display_scale * chu_term(*e.displayed, j + e.display_shift);
        if (lhs != rhs)
            throw ValidationError("entry-display-termwise",
                                  "entry " + e.id + ": emitted term " + std::to_string(j) +
                                      " is " + rat_string(lhs) + " but the display gives " +
                                      rat_string(rhs));
    }
}

} // namespace

void validate_catalog(Catalog& c) {
    std::set<std::string> ids;
    for (auto& f : c.families) {
        if (!ids.insert("f:" + f.id).second)
            throw ValidationError("catalog-unique-id", "duplicate family id " + f.id);
        hyperterm_validate(f.term);
        if (f.certificate.r < 1)
            throw ValidationError("family-shift", "family " + f.id + " has shift r < 1");
        if (f.certificate.p2.is_zero())
            throw ValidationError("certificate-p2-zero", "family " + f.id + " has p2 = 0");
        if (!verify_certificate(f.term, f.certificate).holds)
            throw ValidationError("certificate-residual",
                                  "family " + f.id + " certificate leaves a nonzero residual");
        f.recursion = derive_recursion(f.term, f.certificate);
        try {
            f.rate = convergence_rate(f);
        } catch (const DegreeMismatch& ex) {
            throw ValidationError("family-geometric-rate", "family " + f.id + ": " + ex.what());
        }
        Rat mag = f.rate < 0 ? Rat(-f.rate) : f.rate;
        if (!(mag < 1))
            throw ValidationError("family-geometric-rate", "family " + f.id + " rate " +
                                                               rat_string(f.rate) +
                                                               " is not below one in magnitude");
    }
    for (auto& e : c.entries) {
        if (!ids.insert("e:" + e.id).second)
            throw ValidationError("catalog-unique-id", "duplicate entry id " + e.id);
        if (e.target.empty())
            throw ValidationError("entry-target", "entry " + e.id + " has no target");
        const TransformFamily* fam = nullptr;
        if (!e.family_id.empty()) {
            fam = c.family(e.family_id);
            if (!fam)
                throw ValidationError("entry-family", "entry " + e.id +
                                                          " references unknown family " +
                                                          e.family_id);
            // assignment must be pole-free over k >= 0
            std::array<Rat, NVARS> pt{};
            pt[VN] = e.n0;
            pt[VA] = e.a;
            pt[VB] = e.b;
            for (auto& pf : fam->term.poch) {
                if (pf.exponent >= 0) continue;
                Rat v = pf.base.eval(pt);
                if (v <= 0 && v.get_den() == 1)
                    throw ValidationError("entry-pole-free",
                                          "entry " + e.id + ": lower Pochhammer base " +
                                              rat_string(v) + " vanishes at k=" + rat_string(-v));
            }
            MultiPoly pden = fam->term.prefactor.den.eval_at(VN, e.n0)
                                 .eval_at(VA, e.a)
                                 .eval_at(VB, e.b);
            if (pden.depends_on(VK)) {
                for (auto& [root, mult] : factor_linear_rational(pden).roots)
                    if (root.get_den() == 1 && root >= 0)
                        throw ValidationError("entry-pole-free",
                                              "entry " + e.id + ": prefactor denominator vanishes at k=" +
                                                  rat_string(root));
            }
        }
        if (e.displayed) {
            for (auto& l : e.displayed->lowers)
                if (l <= 0 && l.get_den() == 1)
                    throw ValidationError("entry-display-pole",
                                          "entry " + e.id + ": display lower " + rat_string(l) +
                                              " vanishes at k=" + rat_string(-l));
            try {
                chu_validate(*e.displayed);
            } catch (const ValidationError& ve) {
                std::string msg(ve.what());
                size_t skip = 22 + ve.invariant.size(); // "validation failed [inv]: "
                if (msg.size() > skip) msg = msg.substr(skip);
                throw ValidationError(ve.invariant, "entry " + e.id + ": " + msg);
            }
            if (fam && e.displayed->rate != fam->rate)
                throw ValidationError("entry-display-rate",
                                      "entry " + e.id + " display rate " +
                                          rat_string(e.displayed->rate) +
                                          " differs from the family rate " + rat_string(fam->rate));
            if (fam) check_termwise(e, *fam);
        } else if (!fam) {
            throw ValidationError("entry-family",
                                  "numeric-only entry " + e.id + " needs a displayed series");
        }
    }
}

Catalog load_catalog(const std::string& text) {
    Catalog c = parse_catalog(text);
    validate_catalog(c);
    return c;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str());
}

std::string serialize_catalog(const Catalog& c) {
    std::ostringstream out;
    out << "hyperaccel-catalog v1\n";
    for (auto& f : c.families) {
        out << "\nfamily " << f.id << "\n";
        if (!f.section.empty()) out << "section " << f.section << "\n";
        for (auto& pf : f.term.poch)
            out << "poch " << print_poly(pf.base) << " " << pf.exponent << "\n";
        if (f.term.power_base != 1) out << "power " << rat_string(f.term.power_base) << "\n";
        if (!(f.term.prefactor == RatFunc(1L)))
            out << "prefactor " << print_ratfunc(f.term.prefactor) << "\n";
        out << "r " << f.certificate.r << "\n";
        out << "R " << print_ratfunc(f.certificate.R) << "\n";
        out << "p1 " << print_poly(f.certificate.p1) << "\n";
        out << "p2 " << print_poly(f.certificate.p2) << "\n";
        out << "end\n";
    }
    for (auto& e : c.entries) {
        out << "\nentry " << e.id << "\n";
        if (e.family_id.empty()) {
            out << "numeric-only\n";
        } else {
            out << "family " << e.family_id << "\n";
            out << "assign " << rat_string(e.a) << " " << rat_string(e.b) << " "
                << rat_string(e.n0) << "\n";
        }
        for (auto& t : e.target) {
            out << "target " << rat_string(t.coefficient);
            for (auto& [a, exp] : t.atoms) {
                out << " " << atom_name(a);
                if (exp != 1) out << "^" << exp;
            }
            out << "\n";
        }
        if (e.displayed) {
            const ChuSeries& s = *e.displayed;
            out << "rate " << rat_string(s.rate) << "\n";
            if (!s.uppers.empty()) {
                out << "upper";
                for (auto& u : s.uppers) out << " " << rat_string(u);
                out << "\n";
            }
            if (!s.lowers.empty()) {
                out << "lower";
                for (auto& l : s.lowers) out << " " << rat_string(l);
                out << "\n";
            }
            out << "summand " << print_ratfunc(s.summand, SymbolTable::j_only()) << "\n";
            out << "start " << s.start_index << "\n";
        }
        if (e.display_shifted)
            out << "shifted " << e.display_shift << " " << rat_string(e.display_scale) << "\n";
        if (!e.provenance.empty()) out << "provenance " << e.provenance << "\n";
        out << "end\n";
    }
    return out.str();
}

const Catalog& builtin_catalog() {
    static const Catalog c = load_catalog(builtin_catalog_text());
    return c;
}

SeriesInstance instance_of(const Catalog& c, const CatalogEntry& e) {
    const TransformFamily* fam = c.family(e.family_id);
    if (!fam)
        throw ValidationError("entry-family", "entry " + e.id + " has no family attached");
    return SeriesInstance{fam, e.a, e.b, e.n0, 0};
}

FixedDecimal reference_for(const CatalogEntry& e, long digits) {
    Rat sum = 0;
    for (auto& comp : e.target) sum += reference_value(comp, digits + 2).value();
    return FixedDecimal{scaled_round(sum, digits), digits};
}

EntryReport validate_entry(const Catalog& c, const CatalogEntry& e, long digits) {
    EntryReport rep;
    rep.id = e.id;
    Rat S = 0;
    long used = 0;
    const Rat rel(Int(1), pow10z(digits + 5));
    int calm = 0;
    auto small = [&](const Rat& t) {
        Rat m = t < 0 ? Rat(-t) : t;
        Rat floor = S < 0 ? Rat(-S) : S;
        if (floor < 1) floor = 1;
        return m < rel * floor;
    };
    if (e.displayed) {
        const ChuSeries& s = *e.displayed;
        long cap = terms_for_digits(s.rate, digits + 6) + 24;
        Rat x = rat_pow(s.rate, s.start_index), pu = 1, pl = 1;
        for (auto& u : s.uppers) pu *= pochhammer(u, s.start_index);
        for (auto& l : s.lowers) pl *= pochhammer(l, s.start_index);
        std::array<Rat, NVARS> pt{};
        for (long j = s.start_index; used < cap; ++j) {
            if (pl == 0) throw PoleEncountered("lower Pochhammer", j);
            pt[VN] = Rat(j);
            Rat t = x * pu / pl * s.summand.eval(pt);
            S += t;
            ++used;
            if (small(t)) {
                if (++calm >= 2) break;
            } else {
                calm = 0;
            }
            x *= s.rate;
            for (auto& u : s.uppers) pu *= u + j;
            for (auto& l : s.lowers) pl *= l + j;
        }
    } else {
        SeriesInstance inst = instance_of(c, e);
        const Recursion& rec = inst.family->recursion;
        long cap = terms_for_digits(inst.family->rate, digits + 6) + 24;
        Rat prod = 1;
        auto pt = inst.point();
        for (long j = 0; used < cap; ++j) {
            pt[VN] = inst.n0 + Rat(rec.r * j);
            Rat t = prod * rec.g1.eval(pt);
            S += t;
            ++used;
            if (small(t)) {
                if (++calm >= 2) break;
            } else {
                calm = 0;
            }
            prod *= rec.g2.eval(pt);
        }
    }
    FixedDecimal ref = reference_for(e, digits);
    rep.digits = digits_agree(S, ref);
    rep.fraction_digits = fraction_digits_agree(S, ref);
    rep.terms = used;
    rep.value = decimal_string(S, digits);
    rep.pass = rep.digits >= digits;
    return rep;
}

std::vector<EntryReport> validate_all(const Catalog& c, long digits, bool parallel) {
    std::vector<EntryReport> out(c.entries.size());
    auto one = [&](size_t i) {
        try {
            out[i] = validate_entry(c, c.entries[i], digits);
        } catch (const std::exception& ex) {
            out[i].id = c.entries[i].id;
            out[i].pass = false;
            out[i].error = ex.what();
        }
    };
#ifdef HYPERACCEL_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(c.entries.size()); ++i) one(i);
        return out;
    }
#endif
    (void)parallel;
    for (size_t i = 0; i < c.entries.size(); ++i) one(i);
    return out;
}

} // namespace hyperaccel
