#include "ptrforge/catalog.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <sstream>

#include "ptrforge/collineation.hpp"
#include "ptrforge/error.hpp"
#include "ptrforge/io.hpp"
#include "ptrforge/properties.hpp"

#ifndef PTRFORGE_DATA_DIR
#define PTRFORGE_DATA_DIR "data"
#endif

namespace ptrforge {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("PTRFORGE_DATA_DIR"); env && *env) return env;
  return PTRFORGE_DATA_DIR;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::VerificationFailed, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::vector<CatalogEntry> catalog_entries(const std::filesystem::path& dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(dir / "catalog.json"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("catalog.json: ") + e.what());
  }
  std::vector<CatalogEntry> out;
  for (const auto& e : j.at("entries")) {
    out.push_back({e.at("id"), e.at("kind"), e.at("file"), e.at("sha256"), e.value("claims", nlohmann::json::object())});
  }
  return out;
}

CatalogEntry find_entry(const std::string& id, const std::filesystem::path& dir) {
  for (auto& e : catalog_entries(dir))
    if (e.id == id) return e;
  throw Error(Errc::UnknownEntry, "no catalog entry '" + id + "'");
}

namespace {

struct Checker {
  const CatalogEntry& entry;
  std::vector<std::string>& passed;

  void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::VerificationFailed, entry.id + ": " + what);
    passed.push_back(what);
  }
};

Field parse_field_file(const std::string& text) {
  std::istringstream in(text);
  std::string word, ptok, etok;
  if (!(in >> word >> ptok >> etok) || word != "field" || ptok.rfind("p=", 0) || etok.rfind("e=", 0)) {
    throw Error(Errc::ParseError, "field file needs 'field p=.. e=..'");
  }
  const Field f = Field::make(static_cast<std::uint32_t>(std::stoul(ptok.substr(2))),
                              static_cast<std::uint32_t>(std::stoul(etok.substr(2))));
  std::string kw;
  std::vector<Elem> irr;
  Elem c;
  if (!(in >> kw) || kw != "irreducible") throw Error(Errc::ParseError, "field file needs an irreducible line");
  while (in >> c) irr.push_back(c);
  if (irr != f.irreducible()) throw Error(Errc::VerificationFailed, "stored irreducible differs from the canonical one");
  return f;
}

CatalogObject load_checked(const CatalogEntry& e, const std::filesystem::path& dir, std::vector<std::string>& passed,
                           bool full, unsigned threads) {
  Checker chk{e, passed};
  std::string bytes;
  try {
    bytes = read_file(dir / e.file);
  } catch (const Error& err) {
    throw Error(Errc::VerificationFailed, e.id + ": " + err.detail());
  }
  chk.require(sha256_hex(bytes) == e.sha256, "sha256");
  const auto& c = e.claims;
  try {
    if (e.kind == "field") {
      const Field f = parse_field_file(bytes);
      chk.require(f.p() == c.at("p") && f.e() == c.at("e"), "parameters");
      if (full) {
        std::uint64_t order = 1;
        for (Elem x = f.primitive(); x != 1; x = f.mul(x, f.primitive())) ++order;
        chk.require(order == f.q() - 1, "multiplicative group cyclic");
      }
      return f;
    }
    if (e.kind == "plane") {
      const auto plane = plane_from_json(bytes);
      chk.require(plane.order() == c.at("order"), "axioms and order");
      if (c.contains("field")) {
        const Field f = Field::make(c["field"][0], c["field"][1]);
        chk.require(plane == desarguesian_plane(f), "equals PG(2,q) construction");
      }
      if (full && c.contains("desarguesian")) {
        chk.require(is_desarguesian(plane, threads) == c["desarguesian"].get<bool>(), "desarguesian claim");
      }
      if (full && c.contains("transitive_flags")) {
        const auto prof = transitivity_profile(plane, std::nullopt, true, threads);
        chk.require(prof.verified.size() == c["transitive_flags"].get<std::size_t>(), "transitive flag count");
      }
      return plane;
    }
    if (e.kind == "quasifield") {
      const auto data = quasifield_from_text(bytes);
      auto qp = plane_from_quasifield(data.field, field_addition(data.field), data.mul);
      chk.require(qp.plane.order() == c.at("order"), "quasifield axioms, PTR properties, plane axioms");
      chk.require(qp.left_distributive == c.at("left_distributive") && qp.right_distributive == c.at("right_distributive"),
                  "distributive laws");
      if (full) {
        chk.require(is_desarguesian(qp.plane, threads) == c.at("desarguesian").get<bool>(), "desarguesian claim");
        std::vector<Flag> incident;
        for (LineIndex l = 0; l < qp.plane.num_lines(); ++l)
          for (auto p : qp.plane.points_on(l)) incident.emplace_back(p, l);
        const auto prof = transitivity_profile(qp.plane, incident, false, threads);
        chk.require(prof.translation_lines.size() == c.at("translation_lines").get<std::size_t>(),
                    "translation line count");
      }
      return qp;
    }
    if (e.kind == "ptr-table") {
      auto t = ptr_from_text(bytes);
      chk.require(t.q() == c.at("order"), "order");
      chk.require(check_ptr_properties(t).ptr(), "properties (a)-(e)");
      if (c.contains("additive_is_field_addition") && c["additive_is_field_addition"].get<bool>()) {
        bool ok = true;
        for (Elem x = 0; x < t.q(); ++x)
          for (Elem y = 0; y < t.q(); ++y) ok = ok && t(1, x, y) == t.field().add(x, y);
        chk.require(ok, "additive loop is field addition");
      }
      if (c.contains("multiplicative_is_field_multiplication") && c["multiplicative_is_field_multiplication"].get<bool>()) {
        bool ok = true;
        for (Elem x = 0; x < t.q(); ++x)
          for (Elem y = 0; y < t.q(); ++y) ok = ok && t(x, y, 0) == t.field().mul(x, y);
        chk.require(ok, "multiplicative loop is field multiplication");
      }
      if (full) {
        if (c.contains("linear")) chk.require(is_linear(t).linear == c["linear"].get<bool>(), "linearity claim");
        chk.require(plane_from_ptr(t).order() == t.q(), "rebuilds a plane");
      }
      return t;
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::VerificationFailed, e.id + ": malformed claims: " + ex.what());
  } catch (const Error& err) {
    if (err.code() == Errc::VerificationFailed) throw;
    throw Error(Errc::VerificationFailed, e.id + ": " + std::string(err.what()));
  }
  throw Error(Errc::VerificationFailed, e.id + ": unknown kind '" + e.kind + "'");
}

}  // namespace

CatalogObject load_entry(const std::string& id, const std::filesystem::path& dir) {
  const auto e = find_entry(id, dir);
  std::vector<std::string> passed;
  return load_checked(e, dir, passed, false, 1);
}

VerifyResult verify_entry(const std::string& id, unsigned threads, const std::filesystem::path& dir) {
  const auto e = find_entry(id, dir);
  VerifyResult r{id, false, {}, {}};
  try {
    load_checked(e, dir, r.passed, true, threads);
    r.ok = true;
  } catch (const Error& err) {
    r.failure = err.what();
  }
  return r;
}

}  // namespace ptrforge
