#include "cob/pages.hpp"

#include <sstream>

#include "cob/error.hpp"

namespace cob {

LegendrianInvariants legendrian_invariants(long stab_left, long stab_right) {
  // Stabilizations each lower tb by one and shift rot by -1 (left) or +1 (right).
  LegendrianInvariants inv;
  inv.tb = -1 - stab_left - stab_right;
  inv.rot = stab_right - stab_left;
  inv.framing = inv.tb - 1;
  return inv;
}

DiskBundlePage::DiskBundlePage(long k, long stab_left, long stab_right)
    : k_(k), stab_left_(stab_left), stab_right_(stab_right) {
  if (k < 2) throw Error(ErrorKind::InvalidRecipe, "disk bundle needs k >= 2, got " + std::to_string(k));
  if (stab_left < 0 || stab_right < 0)
    throw Error(ErrorKind::InvalidRecipe, "stabilization counts must be nonnegative");
  if (stab_left + stab_right != k - 2)
    throw Error(ErrorKind::InvalidRecipe,
                "stab_left + stab_right must equal k - 2 = " + std::to_string(k - 2) + ", got " +
                    std::to_string(stab_left + stab_right));
}

std::set<long> realizable_chern_values(long k) {
  std::set<long> out;
  for (long r = -k + 2; r <= k - 2; r += 2) out.insert(r);
  return out;
}

long page_chern_class(const DiskBundlePage& p) { return p.invariants().rot; }

std::string to_string(SphereBundle tag) { return tag == SphereBundle::Trivial ? "S2xS3" : "S2x~S3"; }

TrivialMonodromySpace trivial_monodromy_total_space(const DiskBundlePage& p) {
  return {p.k() % 2 == 0 ? SphereBundle::Trivial : SphereBundle::Twisted, page_chern_class(p),
          ClosedBookHomology::from_h2(FgAbelianGroup::free(1))};
}

DiskBundlePage mirror(const DiskBundlePage& p) { return {p.k(), p.stab_right(), p.stab_left()}; }

std::string page_kind(const PageSpec& p) {
  switch (p.index()) {
    case 0: return "disk_bundle";
    case 1: return "brieskorn";
    default: return "disk";
  }
}

std::string describe(const PageSpec& p) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DiskBundlePage>(&p)) {
    os << "disk_bundle(k=" << d->k() << ',' << d->stab_left() << ',' << d->stab_right() << ')';
  } else if (const auto* b = std::get_if<BrieskornPage>(&p)) {
    os << "brieskorn(";
    for (std::size_t i = 0; i < b->exponents.size(); ++i) os << (i ? "," : "") << b->exponents[i];
    os << ')';
    if (b->rotated_coordinate != 0) os << "@z" << b->rotated_coordinate;
    if (b->rotation_power != 1) os << '^' << b->rotation_power;
  } else {
    os << "disk";
  }
  return os.str();
}

void to_json(nlohmann::json& j, const PageSpec& p) {
  if (const auto* d = std::get_if<DiskBundlePage>(&p)) {
    j = {{"kind", "disk_bundle"}, {"k", d->k()}, {"stab_left", d->stab_left()}, {"stab_right", d->stab_right()}};
  } else if (const auto* b = std::get_if<BrieskornPage>(&p)) {
    j = {{"kind", "brieskorn"}, {"exponents", b->exponents}, {"rotation_power", b->rotation_power}};
    if (b->rotated_coordinate != 0) j["rotated_coordinate"] = b->rotated_coordinate;
  } else {
    j = {{"kind", "disk"}};
  }
}

namespace {

long int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("page is missing \"") + key + '"');
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, std::string("\"") + key + "\" must be an integer");
  return v.get<long>();
}

}  // namespace

PageSpec page_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorKind::Parse, "page must be an object with a string \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "disk_bundle")
    return DiskBundlePage(int_field(j, "k"), int_field(j, "stab_left"), int_field(j, "stab_right"));
  if (kind == "brieskorn") {
    if (!j.contains("exponents")) throw Error(ErrorKind::Parse, "brieskorn page needs \"exponents\"");
    BrieskornPage b{exponents_from_json(j.at("exponents"))};
    if (j.contains("rotation_power")) b.rotation_power = int_field(j, "rotation_power");
    if (j.contains("rotated_coordinate")) {
      const long c = int_field(j, "rotated_coordinate");
      if (c < 0 || static_cast<std::size_t>(c) >= b.exponents.size())
        throw Error(ErrorKind::InvalidRecipe, "rotated_coordinate out of range");
      b.rotated_coordinate = static_cast<std::size_t>(c);
    }
    if (b.rotation_power < 1) throw Error(ErrorKind::InvalidRecipe, "rotation_power must be >= 1");
    if (b.exponents.size() != 3)
      throw Error(ErrorKind::InvalidRecipe, "a page of a five-dimensional open book takes 3 exponents");
    return b;
  }
  if (kind == "disk") return DiskPage{};
  throw Error(ErrorKind::Parse, "unknown page kind \"" + kind + '"');
}

}  // namespace cob
