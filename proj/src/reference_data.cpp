#include "p1gw/reference_data.hpp"

#include <initializer_list>

#include "p1gw/errors.hpp"
#include "p1gw/exact.hpp"

namespace p1gw::reference {

namespace {

using TermList = std::initializer_list<std::pair<int, const char*>>;

EpsLaurent eps(TermList terms) {
  std::vector<EpsLaurent::Term> out;
  for (const auto& [e, v] : terms) out.emplace_back(e, parse_rational(v));
  return EpsLaurent::from_terms(std::move(out));
}

TableRow row(int n, std::initializer_list<const char*> cells) {
  TableRow r;
  r.n = n;
  for (const char* c : cells) r.by_genus.push_back(parse_rational(c));
  return r;
}

}  // namespace

const std::vector<Mat2<EpsLaurent>>& resolvent_head() {
  static const std::vector<Mat2<EpsLaurent>> head = {
      {eps({{0, "1"}}), {}, {}, {}},
      {{}, eps({{0, "-1"}}), eps({{0, "1"}}), {}},
      {eps({{0, "1"}}), eps({{1, "-1/2"}}), eps({{1, "-1/2"}}), eps({{0, "-1"}})},
      {{}, eps({{0, "-2"}, {2, "-1/4"}}), eps({{0, "2"}, {2, "1/4"}}), {}},
      {eps({{0, "3"}, {2, "1/4"}}), eps({{1, "-3"}, {3, "-1/8"}}), eps({{1, "-3"}, {3, "-1/8"}}),
       eps({{0, "-3"}, {2, "-1/4"}})},
  };
  return head;
}

const std::vector<SeriesValue>& flagship_correlators() {
  static const std::vector<SeriesValue> values = {
      {{1, 1, 1, 1, 1, 1}, eps({{-2, "120"}, {0, "40"}, {2, "1/2"}})},
      {{2, 2, 2, 2, 2},
       eps({{-2, "36"}, {0, "2513/24"}, {2, "9745/144"}, {4, "5435/768"}, {6, "2801/82944"}, {8, "1/7962624"}})},
      {{3, 3, 3, 3},
       eps({{-2, "1/2"}, {0, "209/48"}, {2, "1835/192"}, {4, "34807/6912"}, {6, "32053/82944"}, {8, "625/663552"}})},
      {{4, 4, 4},
       eps({{-2, "1/64"},
            {0, "59/384"},
            {2, "4217/10240"},
            {4, "433/1536"},
            {6, "443323/14745600"},
            {8, "1261/9830400"},
            {10, "1/7077888000"}})},
      {{6, 6},
       eps({{-2, "1/9072"},
            {0, "1/648"},
            {2, "791/138240"},
            {4, "30907/5806080"},
            {6, "94537/116121600"},
            {8, "1781/309657600"},
            {10, "1/104044953600"}})},
  };
  return values;
}

const std::vector<EpsLaurent>& one_point_series_head() {
  static const std::vector<EpsLaurent> head = {
      eps({{-1, "1"}, {1, "-1/24"}}),
      eps({{-1, "3/2"}, {1, "1/4"}, {3, "7/960"}}),
      eps({{-1, "10/3"}, {1, "15/4"}, {3, "1/16"}, {5, "-31/8064"}}),
  };
  return head;
}

const TableRow* PolygonReference::row(int n) const {
  for (const auto& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

const std::vector<PolygonReference>& polygon_tables() {
  static const std::vector<PolygonReference> tables = {
      {1,
       {
           row(2, {"1/2", "0", "0", "0", "0", "0"}),
           row(4, {"4", "1/2", "0", "0", "0", "0"}),
           row(6, {"120", "40", "1/2", "0", "0", "0"}),
           row(8, {"8400", "5460", "364", "1/2", "0", "0"}),
           row(10, {"1088640", "1189440", "206640", "3280", "1/2", "0"}),
           row(12, {"228191040", "382536000", "131670000", "7528620", "29524", "1/2"}),
           row(14, {"70849658880", "171121991040", "100557737280", "13626893280", "271831560", "265720"}),
           row(16, {"30641612601600", "101797606310400", "92919587080320", "24109381296000", "1379375197200",
                    "9793126980"}),
           row(18, {"17643225600000000", "77793710054860800", "103292024327331840", "45097329069112320",
                    "5576183206513920", "138543794363520"}),
           row(20, {"13065029061833548800", "74313410195920896000", "136749665725094822400",
                    "92137709502328089600", "20847925547391983040", "1270116357617016000"}),
       }},
      {2,
       {
           row(1, {"1/4", "1/24", "17/1920", "0", "0", "0"}),
           row(2, {"1/3", "1/6", "1/576", "0", "0", "0"}),
           row(3, {"1", "25/24", "19/192", "1/13824", "0", "0"}),
           row(4, {"5", "55/6", "263/96", "25/432", "1/331776", "0"}),
           row(5, {"36", "2513/24", "9745/144", "5435/768", "2801/82944", "1/7962624"}),
           row(6, {"343", "1474", "328033/192", "207985/432", "225751/12288", "817/41472"}),
           row(7, {"4096", "592513/24", "366723/8", "364153055/13824", "1107239/324", "4713415/98304"}),
           row(8, {"59049", "1439180/3", "190470301/144", "2648233/2", "66481768255/165888", "378470995/15552"}),
           row(9, {"1000000", "84897195/8", "41142049", "74726723365/1152", "597185127/16",
                   "2690321702971/442368"}),
       }},
      {3,
       {
           row(2, {"1/16", "1/8", "25/1152", "0", "0", "0"}),
           row(4, {"1/2", "209/48", "1835/192", "34807/6912", "32053/82944", "625/663552"}),
           row(6, {"333/16", "7325/16", "1313519/384", "46028125/4608", "1176074965/110592",
                   "2225242915/663552"}),
           row(8, {"9065/4", "1571255/16", "320152903/192", "93077990807/6912", "215408105005/4096",
                   "5199315506441/55296"}),
           row(10, {"3855285/8", "1140753285/32", "143868323725/128", "9601626378785/512", "177927208378767/1024",
                    "784631685765104095/884736"}),
       }},
      {4,
       {
           row(1, {"1/36", "5/96", "1/1920", "-457/967680", "0", "0", "0"}),
           row(2, {"1/80", "5/96", "421/11520", "31/15360", "1/3686400", "0", "0"}),
           row(3, {"1/64", "59/384", "4217/10240", "433/1536", "443323/14745600", "1261/9830400", "1/7077888000"}),
           row(4, {"9/256", "21/32", "127787/30720", "900707/92160", "14478481/1966080", "311747/245760",
                   "57610061/2359296000"}),
           row(5, {"121/1024", "5651/1536", "1446187/32768", "1451959/6144", "12797341609/23592960",
                   "5503855157/11796480", "266585680493/2264924160"}),
       }},
      {5,
       {
           row(2, {"1/864", "1/96", "451/23040", "2597/414720", "8281/66355200", "0", "0"}),
           row(4, {"1/1728", "1039/41472", "12161/31104", "8658131/3317760", "80902129/11059200",
                   "6108849167/796262400", "28686913747/11943936000"}),
           row(6, {"137/82944", "46691/248832", "72455425/7962624", "3734329163/15925248",
                   "3231504856837/955514880", "311933225742569/11466178560", "108033950880129851/917294284800"}),
           row(8, {"113507/8957952", "103619845/35831808", "164491428073/537477120", "6803735203921/358318080",
                   "127548309823336381/171992678400", "5129142288162642911/275188285440",
                   "3730500946382673048971/12383472844800"}),
       }},
      {6,
       {
           row(1, {"1/576", "1/96", "23/4608", "1/322560", "3287/154828800", "0", "0"}),
           row(2, {"1/9072", "1/648", "791/138240", "30907/5806080", "94537/116121600", "1781/309657600",
                   "1/104044953600"}),
           row(3, {"1/46656", "31/41472", "15431/1658880", "13082513/278691840", "55549391/619315200",
                   "114802747/2123366400", "44854036799/6242697216000"}),
           row(4, {"13/1679616", "197/373248", "1324607/89579520", "191700403/940584960",
                   "62268350861/44590694400", "150956609173/33443020800", "99806823299633/16052649984000"}),
           row(5, {"1/236196", "8789/17915904", "8175239/322486272", "19383629785/27088846848",
                   "461054026649/40131624960", "2400460683943939/23115815976960",
                   "246762110732615767/485432135516160"}),
       }},
  };
  return tables;
}

const PolygonReference& polygon_table_reference(int b) {
  for (const auto& t : polygon_tables()) {
    if (t.b == b) return t;
  }
  throw InvalidArgument("no reference table for b = " + std::to_string(b));
}

bool is_known_conflict(int b, int n) { return n == 1 && (b == 2 || b == 4 || b == 6); }

}  // namespace p1gw::reference
