#include <staircase/records.hpp>

#include <charconv>
#include <system_error>

#include <json.hpp>

#include <staircase/series.hpp>

namespace staircase
{

using Json = nlohmann::ordered_json;

namespace
{

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json optional_size(const std::optional<std::size_t> &v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::optional<std::size_t> read_optional_size(const Json &j)
{
    return j.is_null() ? std::nullopt : std::optional<std::size_t>(j.get<std::size_t>());
}

std::string csv_quote(const std::string &field)
{
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char ch : field) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string optional_text(const std::optional<std::size_t> &v)
{
    return v ? std::to_string(*v) : std::string();
}

std::string count_label(const CountRecord &c)
{
    const std::string fn = c.kind == "concave" ? "p_c" : c.kind == "superconcave" ? "p_sc" : "p";
    return fn + "(" + std::to_string(c.n) + (c.r ? "," + std::to_string(*c.r) : "") + ")";
}

std::string exponents_text(const Exponents &e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        out += (i ? "," : "") + std::to_string(e[i]);
    }
    return out;
}

} // namespace

Format parse_format(std::string_view name)
{
    if (name == "plain") {
        return Format::plain;
    }
    if (name == "json") {
        return Format::json;
    }
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "bfile") {
        return Format::bfile;
    }
    throw FormatError("unknown format '" + std::string(name) + "'");
}

std::string format_real(double value)
{
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
    if (ec != std::errc{}) {
        throw std::runtime_error("cannot format real");
    }
    return std::string(buf, ptr);
}

double parse_real(std::string_view text)
{
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a fixed-notation real: '" + std::string(text) + "'");
    }
    return value;
}

std::string to_json_line(const OutputRecord &record)
{
    Json j;
    std::visit(overloaded{
                   [&j](const PredicateRecord &p) {
                       j["type"] = "predicate";
                       j["partition"] = p.partition.to_string();
                       j["concave"] = p.concave;
                       j["superconcave"] = p.superconcave;
                       j["closure"] = p.closure.to_string();
                   },
                   [&j](const CountRecord &c) {
                       j["type"] = "count";
                       j["kind"] = c.kind;
                       j["n"] = c.n;
                       j["r"] = optional_size(c.r);
                       j["value"] = to_decimal(c.value);
                   },
                   [&j](const SeriesRecord &s) {
                       j["type"] = "series";
                       j["name"] = s.name;
                       j["r"] = optional_size(s.r);
                       j["trunc"] = s.trunc;
                       Json coefficients = Json::array();
                       for (const auto &c : s.coefficients) {
                           coefficients.push_back(to_decimal(c));
                       }
                       j["coefficients"] = std::move(coefficients);
                   },
                   [&j](const PolynomialRecord &p) {
                       j["type"] = "polynomial";
                       j["name"] = p.name;
                       j["r"] = p.r;
                       Json terms = Json::array();
                       for (const auto &[e, c] : p.polynomial.terms()) {
                           Json term;
                           term["exponents"] = e;
                           term["coefficient"] = to_decimal(c);
                           terms.push_back(std::move(term));
                       }
                       j["terms"] = std::move(terms);
                   },
                   [&j](const AsymptoticRecord &a) {
                       j["type"] = "asymptotic";
                       j["n"] = a.n;
                       j["exact"] = to_decimal(a.exact);
                       j["estimate"] = format_real(a.estimate);
                       j["ratio"] = format_real(a.ratio);
                   },
               },
               record);
    return j.dump();
}

OutputRecord parse_json_line(std::string_view line)
{
    Json j;
    try {
        j = Json::parse(line);
        const auto type = j.at("type").get<std::string>();
        if (type == "predicate") {
            return PredicateRecord{Partition::parse(j.at("partition").get<std::string>()), j.at("concave").get<bool>(),
                                   j.at("superconcave").get<bool>(),
                                   Partition::parse(j.at("closure").get<std::string>())};
        }
        if (type == "count") {
            return CountRecord{j.at("kind").get<std::string>(), j.at("n").get<std::size_t>(),
                               read_optional_size(j.at("r")), parse_decimal(j.at("value").get<std::string>())};
        }
        if (type == "series") {
            SeriesRecord s{j.at("name").get<std::string>(), read_optional_size(j.at("r")),
                           j.at("trunc").get<std::size_t>(), {}};
            for (const auto &c : j.at("coefficients")) {
                s.coefficients.push_back(parse_decimal(c.get<std::string>()));
            }
            return s;
        }
        if (type == "polynomial") {
            PolynomialRecord p{j.at("name").get<std::string>(), j.at("r").get<std::size_t>(), MultiPoly(0)};
            p.polynomial = MultiPoly(p.r);
            for (const auto &term : j.at("terms")) {
                p.polynomial.add_term(term.at("exponents").get<Exponents>(),
                                      parse_decimal(term.at("coefficient").get<std::string>()));
            }
            return p;
        }
        if (type == "asymptotic") {
            return AsymptoticRecord{j.at("n").get<std::size_t>(), parse_decimal(j.at("exact").get<std::string>()),
                                    parse_real(j.at("estimate").get<std::string>()),
                                    parse_real(j.at("ratio").get<std::string>())};
        }
        throw std::invalid_argument("unknown record type '" + type + "'");
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

RecordWriter::RecordWriter(std::ostream &out, Format format) : m_out(out), m_format(format)
{
}

void RecordWriter::write(const OutputRecord &record)
{
    if (m_format == Format::json) {
        m_out << to_json_line(record) << '\n';
        return;
    }
    if (m_format == Format::csv && m_csv_kind != record.index()) {
        m_csv_kind = record.index();
        static const char *const headers[] = {
            "partition,concave,superconcave,closure", "kind,n,r,value", "name,r,index,coefficient",
            "name,r,exponents,coefficient", "n,exact,estimate,ratio"};
        m_out << headers[record.index()] << '\n';
    }
    const auto format = m_format;
    auto &out = m_out;
    std::visit(overloaded{
                   [&](const PredicateRecord &p) {
                       const auto text = [](const Partition &l) { return l.empty() ? std::string("0") : l.to_string(); };
                       if (format == Format::plain) {
                           out << "partition: " << text(p.partition) << '\n'
                               << "concave: " << (p.concave ? "true" : "false") << '\n'
                               << "super-concave: " << (p.superconcave ? "true" : "false") << '\n';
                           if (!p.concave) {
                               out << "closure: " << text(p.closure) << '\n';
                           }
                       } else if (format == Format::csv) {
                           out << csv_quote(p.partition.to_string()) << ',' << (p.concave ? "true" : "false") << ','
                               << (p.superconcave ? "true" : "false") << ',' << csv_quote(p.closure.to_string())
                               << '\n';
                       } else {
                           throw FormatError("predicate results have no b-file form");
                       }
                   },
                   [&](const CountRecord &c) {
                       if (format == Format::plain) {
                           out << count_label(c) << " = " << c.value << '\n';
                       } else if (format == Format::csv) {
                           out << c.kind << ',' << c.n << ',' << optional_text(c.r) << ',' << c.value << '\n';
                       } else {
                           out << c.n << ' ' << c.value << '\n';
                       }
                   },
                   [&](const SeriesRecord &s) {
                       if (format == Format::plain) {
                           out << UniSeries(s.coefficients, s.coefficients.empty() ? 0 : s.coefficients.size() - 1)
                                      .to_string()
                               << '\n';
                       } else {
                           for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
                               if (format == Format::csv) {
                                   out << s.name << ',' << optional_text(s.r) << ',' << k << ',' << s.coefficients[k]
                                       << '\n';
                               } else {
                                   out << k << ' ' << s.coefficients[k] << '\n';
                               }
                           }
                       }
                   },
                   [&](const PolynomialRecord &p) {
                       if (format == Format::plain) {
                           out << p.polynomial.to_string() << '\n';
                       } else if (format == Format::csv) {
                           for (const auto &[e, c] : p.polynomial.terms()) {
                               out << p.name << ',' << p.r << ',' << csv_quote(exponents_text(e)) << ',' << c << '\n';
                           }
                       } else {
                           throw FormatError("multivariate polynomials have no b-file form");
                       }
                   },
                   [&](const AsymptoticRecord &a) {
                       if (format == Format::plain) {
                           out << "n=" << a.n << " exact=" << a.exact << " estimate=" << format_real(a.estimate)
                               << " ratio=" << format_real(a.ratio) << '\n';
                       } else if (format == Format::csv) {
                           out << a.n << ',' << a.exact << ',' << format_real(a.estimate) << ','
                               << format_real(a.ratio) << '\n';
                       } else {
                           out << a.n << ' ' << a.exact << '\n';
                       }
                   },
               },
               record);
}

} // namespace staircase
