#include "semiquad/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace semiquad {

ParseError::ParseError(std::size_t line, const std::string& message)
    : UsageError(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      message_(message) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_index(const std::string& digits, std::size_t line) {
  if (digits.size() > 4) throw ParseError(line, "generator index x" + digits + " is out of range");
  return std::stoi(digits);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  static const std::regex header(R"(generators\s+(\d+))");
  static const std::regex relation(
      R"(x(\d+)\s*\*\s*x(\d+)\s*=\s*(?:(0)|x(\d+)\s*\*\s*x(\d+)))");

  std::optional<int> n;
  std::vector<Relation> relations;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line(trim(raw));
    if (line.empty()) continue;

    std::smatch m;
    if (!n) {
      if (!std::regex_match(line, m, header)) {
        throw ParseError(line_no, "expected 'generators N', got '" + line + "'");
      }
      const int count = parse_index(m[1].str(), line_no);
      if (count < 1 || count > kMaxGenerators) {
        throw ParseError(line_no, "generator count must be in 1.." + std::to_string(kMaxGenerators));
      }
      n = count;
      continue;
    }
    if (std::regex_match(line, m, header)) throw ParseError(line_no, "repeated 'generators' line");
    if (!std::regex_match(line, m, relation)) {
      throw ParseError(line_no, "malformed relation '" + line + "'");
    }
    auto letter = [&](int group) {
      const int v = parse_index(m[group].str(), line_no);
      if (v < 1) throw ParseError(line_no, "generator index must be positive");
      if (v > *n) {
        throw ParseError(line_no, "index " + std::to_string(v) + " exceeds alphabet of size " +
                                      std::to_string(*n));
      }
      return static_cast<Letter>(v);
    };
    const Pair ab{letter(1), letter(2)};
    std::optional<Relation> r;
    if (m[3].matched) {
      r = Relation::zero(ab);
    } else {
      const Pair cd{letter(4), letter(5)};
      if (ab == cd) throw ParseError(line_no, "both sides of '" + line + "' are equal");
      r = Relation::equal(ab, cd);
    }
    for (const auto& prev : relations) {
      if (prev == *r) throw ParseError(line_no, "duplicate relation '" + r->render() + "'");
    }
    relations.push_back(*r);
  }
  if (!n) throw ParseError(0, "missing 'generators N' line");
  return Presentation(Alphabet(*n), std::move(relations));
}

Presentation read_presentation_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path.string() + ":" + (e.line() ? std::to_string(e.line()) + ":" : "") + " " +
                     e.message());
  }
}

std::string render_presentation(const Presentation& p) { return canonical_text(p); }

namespace {

Json pair_json(Pair q) { return Json::array({q.left, q.right}); }

Pair pair_from(const Json& j, int n) {
  if (!j.is_array() || j.size() != 2) throw UsageError("json: a pair must be [a, b]");
  const int a = j[0].get<int>(), b = j[1].get<int>();
  if (a < 1 || b < 1 || a > n || b > n) throw UsageError("json: generator index out of range");
  return {static_cast<Letter>(a), static_cast<Letter>(b)};
}

}  // namespace

Json presentation_to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations()) {
    if (r.is_zero()) {
      rels.push_back({{"zero", pair_json(r.lead())}});
    } else {
      rels.push_back({{"equal", Json::array({pair_json(r.lead()), pair_json(r.tail())})}});
    }
  }
  return {{"n", p.n()}, {"relations", rels}};
}

Presentation presentation_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxGenerators) throw UsageError("json: n out of range");
    std::vector<Relation> rels;
    for (const auto& r : j.at("relations")) {
      if (r.contains("zero")) {
        rels.push_back(Relation::zero(pair_from(r["zero"], n)));
      } else if (r.contains("equal") && r["equal"].size() == 2) {
        rels.push_back(Relation::equal(pair_from(r["equal"][0], n), pair_from(r["equal"][1], n)));
      } else {
        throw UsageError("json: relation must hold 'zero' or 'equal'");
      }
    }
    return Presentation(Alphabet(n), std::move(rels));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("json: ") + e.what());
  }
}

Json word_to_json(const Word& w) { return w.to_vector(); }

Json certificate_to_json(const Certificate& c) {
  switch (c.type) {
    case Certificate::Type::SePair: return {{"type", "se_pair"}, {"a", c.a}, {"b", c.b}};
    case Certificate::Type::ZeroSum: return {{"type", "zero_sum"}};
    case Certificate::Type::None: return {{"type", "none"}, {"reason", c.reason}};
  }
  return {};
}

Json basis_to_json(const MinimalBasis& basis, bool truncated) {
  Json mins = Json::array(), sing = Json::array();
  for (const auto& w : basis.minimals) mins.push_back(word_to_json(w));
  for (const auto& w : basis.singular) sing.push_back(word_to_json(w));
  return {{"degree", basis.degree}, {"minimals", mins}, {"singular", sing}, {"truncated", truncated}};
}

Json profile_to_json(const HilbertProfile& profile) {
  Json j{{"dims", profile.dims},
         {"truncated_at", profile.truncated_at},
         {"truncated", profile.truncated},
         {"verdict", profile.finite() ? "finite_dimensional" : "unknown_up_to"},
         {"note", profile.note}};
  if (profile.finite()) {
    j["nilpotency_index"] = profile.nilpotency_index;
    j["total_dimension"] = *total_dimension(profile);
  }
  return j;
}

HilbertProfile profile_from_json(const Json& j) {
  HilbertProfile h;
  h.dims = j.at("dims").get<std::vector<std::uint64_t>>();
  h.truncated_at = j.at("truncated_at").get<std::size_t>();
  h.truncated = j.at("truncated").get<bool>();
  h.note = j.value("note", "");
  if (j.at("verdict").get<std::string>() == "finite_dimensional") {
    h.verdict = HilbertProfile::Verdict::FiniteDimensional;
    h.nilpotency_index = j.at("nilpotency_index").get<std::size_t>();
  }
  return h;
}

std::string profile_to_csv(const HilbertProfile& profile) {
  std::string out = "degree,dim\n";
  for (std::size_t m = 0; m < profile.dims.size(); ++m) {
    out += std::to_string(m) + "," + std::to_string(profile.dims[m]) + "\n";
  }
  return out;
}

Json regularity_to_json(const RegularityResult& r) {
  return {{"status", to_string(r.status)},
          {"degree", r.degree},
          {"singular_counts", r.singular_counts},
          {"note", r.note}};
}

RegularityResult regularity_from_json(const Json& j) {
  RegularityResult r;
  const auto status = j.at("status").get<std::string>();
  for (auto s : {RegularityResult::Status::Regular, RegularityResult::Status::IrregularUpTo,
                 RegularityResult::Status::Inconclusive}) {
    if (to_string(s) == status) r.status = s;
  }
  r.degree = j.at("degree").get<std::size_t>();
  r.singular_counts = j.at("singular_counts").get<std::vector<std::size_t>>();
  r.note = j.value("note", "");
  return r;
}

}  // namespace semiquad
