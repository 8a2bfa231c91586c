#include "axcheck/report.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "axcheck/parser.hpp"

namespace axcheck {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) {
    throw std::invalid_argument(std::string(key) + ": not a number: " + std::string(value));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument(std::string(key) + ": expected true or false");
}

}  // namespace

void RunConfig::apply(std::string_view key, std::string_view value) {
  if (key == "n") {
    n = parse_number<std::uint32_t>(key, value);
  } else if (key == "mode") {
    mode = parse_iso_mode(value);
  } else if (key == "cap") {
    cap = parse_number<std::uint64_t>(key, value);
  } else if (key == "bound") {
    bound = parse_number<std::size_t>(key, value);
  } else if (key == "limit") {
    limit = parse_number<std::size_t>(key, value);
  } else if (key == "parallelism") {
    parallelism = parse_number<unsigned>(key, value);
  } else if (key == "format") {
    if (value == "json") {
      format = OutputFormat::json;
    } else if (value == "text") {
      format = OutputFormat::text;
    } else {
      throw std::invalid_argument("format must be text or json");
    }
  } else if (key == "deterministic") {
    deterministic = parse_bool(key, value);
  } else {
    throw std::invalid_argument("unknown configuration key: " + std::string(key));
  }
}

void RunConfig::apply_config_text(std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value");
    }
    apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (cap < 1 || cap > 24) throw std::invalid_argument("cap must lie in [1, 24]");
  if (bound > 32) throw std::invalid_argument("bound must be at most 32");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  base.apply_config_text(ss.str());
  return base;
}

std::string content_hash(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Json evidence_json(const Universe& universe, const Signature& signature, const EvidenceValue& value) {
  struct Visitor {
    const Universe& u;
    const Signature& sig;
    Json operator()(const ModelAssignment& m) const {
      return {{"kind", "model"}, {"value", format_model(u, sig, m)}};
    }
    Json operator()(const ModelPair& p) const {
      Json j{{"kind", "pair"},
             {"first", format_model(u, sig, p.first)},
             {"second", format_model(u, sig, p.second)}};
      if (p.correlator) {
        Json map = Json::array();
        for (auto [from, to] : p.correlator->graph()) map.push_back({from, to});
        j["correlator"] = {{"mode", to_string(p.correlator->mode())}, {"map", map}};
      }
      return j;
    }
    Json operator()(const Formula& f) const { return {{"kind", "formula"}, {"value", pretty_print(f)}}; }
    Json operator()(const IsoClassPredicate& h) const {
      return {{"kind", "iso_class"},
              {"representative", format_model(u, sig, h.representative)},
              {"mode", to_string(h.mode)}};
    }
    Json operator()(const PartitionSummary& s) const {
      Json classes = Json::array();
      for (const auto& [rep, size] : s.classes) {
        classes.push_back({{"representative", format_model(u, sig, rep)}, {"size", size}});
      }
      return {{"kind", "partition"}, {"models", s.model_count}, {"classes", classes}};
    }
  };
  return std::visit(Visitor{universe, signature}, value);
}

Json judgment_json(const Universe& universe, const Signature& signature, const Judgment& judgment) {
  Json j;
  j["property"] = judgment.property;
  j["absolute"] = judgment.absolute;
  j["constructive"] = judgment.constructive();
  if (judgment.subject) j["subject"] = pretty_print(*judgment.subject);
  if (!judgment.conjuncts.empty()) {
    Json c = Json::array();
    for (const auto& [name, holds] : judgment.conjuncts) c.push_back({{"name", name}, {"holds", holds}});
    j["conjuncts"] = c;
  }
  auto evidence = [&](const std::vector<Evidence>& list) {
    Json out = Json::object();
    for (const auto& e : list) out[e.label] = evidence_json(universe, signature, e.value);
    return out;
  };
  if (!judgment.witness.empty()) j["witness"] = evidence(judgment.witness);
  if (!judgment.counterexample.empty()) j["counterexample"] = evidence(judgment.counterexample);
  j["notes"] = judgment.notes;
  j["provenance"] = {{"n", judgment.provenance.n},
                     {"mode", to_string(judgment.provenance.mode)},
                     {"cap", judgment.provenance.cap},
                     {"bound", judgment.provenance.size_bound}};
  return j;
}

Json to_json(const Report& report) {
  const auto& c = report.config;
  Json config{{"n", c.n},
              {"mode", to_string(c.mode)},
              {"cap", c.cap},
              {"bound", c.bound},
              {"limit", c.limit}};
  if (!c.deterministic) config["parallelism"] = c.parallelism;
  Json j;
  j["command"] = report.command;
  j["config"] = config;
  j["system"] = {{"name", report.system_name}, {"hash", report.system_hash}};
  if (report.models) {
    j["models"] = {{"count", report.models->count},
                   {"shown", report.models->shown},
                   {"truncated", report.models->shown.size() < report.models->count}};
  }
  j["judgments"] = report.judgments;
  if (!c.deterministic && report.timing_ms) j["timing_ms"] = *report.timing_ms;
  return j;
}

namespace {

std::string evidence_text(const Json& e) {
  const std::string kind = e.at("kind");
  if (kind == "model" || kind == "formula") return e.at("value");
  if (kind == "iso_class") {
    return "isomorphic to " + e.at("representative").get<std::string>() + " (" +
           e.at("mode").get<std::string>() + ")";
  }
  if (kind == "pair") {
    std::string out = e.at("first").get<std::string>() + "  vs  " + e.at("second").get<std::string>();
    if (e.contains("correlator")) {
      out += "  via ";
      bool first = true;
      for (const auto& pair : e["correlator"]["map"]) {
        out += (first ? "" : ", ") + std::to_string(pair[0].get<int>()) + "->" + std::to_string(pair[1].get<int>());
        first = false;
      }
    }
    return out;
  }
  std::string out = std::to_string(e.at("models").get<std::uint64_t>()) + " model(s):";
  for (const auto& c : e.at("classes")) {
    out += " [" + c.at("representative").get<std::string>() + " x" +
           std::to_string(c.at("size").get<std::uint64_t>()) + "]";
  }
  return out;
}

}  // namespace

std::string render_text(const Json& record) {
  std::ostringstream out;
  const auto& cfg = record.at("config");
  out << "axcheck " << record.at("command").get<std::string>() << ": system "
      << record.at("system").at("name").get<std::string>() << " (sha256 "
      << record.at("system").at("hash").get<std::string>().substr(0, 16) << ")\n";
  out << "universe: n=" << cfg.at("n") << " mode=" << cfg.at("mode").get<std::string>()
      << " cap=" << cfg.at("cap") << " bound=" << cfg.at("bound") << "\n";
  if (record.contains("models")) {
    const auto& m = record["models"];
    out << "models: " << m.at("count") << "\n";
    for (const auto& s : m.at("shown")) out << "  " << s.get<std::string>() << "\n";
    if (m.at("truncated").get<bool>()) {
      out << "  ... " << (m.at("count").get<std::uint64_t>() - m.at("shown").size()) << " more\n";
    }
  }
  for (const auto& j : record.at("judgments")) {
    out << j.at("property").get<std::string>() << ": " << (j.at("absolute").get<bool>() ? "true" : "false");
    if (j.contains("subject")) out << "  [g = " << j["subject"].get<std::string>() << "]";
    out << "\n";
    if (j.contains("conjuncts")) {
      for (const auto& c : j["conjuncts"]) {
        out << "  conjunct " << c.at("name").get<std::string>() << ": "
            << (c.at("holds").get<bool>() ? "true" : "false") << "\n";
      }
    }
    for (const char* section : {"witness", "counterexample"}) {
      if (!j.contains(section)) continue;
      for (const auto& [label, e] : j[section].items()) {
        out << "  " << section << " " << label << ": " << evidence_text(e) << "\n";
      }
    }
    for (const auto& note : j.at("notes")) out << "  note: " << note.get<std::string>() << "\n";
  }
  if (record.contains("timing_ms")) out << "time: " << record["timing_ms"].get<double>() << " ms\n";
  return out.str();
}

}  // namespace axcheck
