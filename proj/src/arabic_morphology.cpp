#include "lsasumm/arabic_morphology.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "lsasumm/utf8.hpp"

namespace lsasumm {

namespace {

using std::u32string;
using std::u32string_view;

bool is_arabic(char32_t cp) { return cp >= 0x0600 && cp <= 0x06FF; }

bool contains_arabic(u32string_view word) {
  return std::any_of(word.begin(), word.end(), is_arabic);
}

bool is_diacritic(char32_t cp) {
  return (cp >= 0x064B && cp <= 0x0652) || cp == 0x0640;  // short vowels, shadda, sukun, tatweel
}

bool starts_with(u32string_view word, u32string_view prefix) {
  return word.size() >= prefix.size() && word.substr(0, prefix.size()) == prefix;
}

bool ends_with(u32string_view word, u32string_view suffix) {
  return word.size() >= suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

void sort_by_length_desc(std::vector<u32string>& affixes) {
  std::stable_sort(affixes.begin(), affixes.end(),
                   [](const u32string& a, const u32string& b) { return a.size() > b.size(); });
}

std::vector<u32string> read_affix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open affix table: " + path.string());
  std::vector<u32string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    u32string cps = utf8::decode(line);
    std::erase_if(cps, [](char32_t c) { return utf8::is_space(c); });
    if (!cps.empty()) out.push_back(std::move(cps));
  }
  return out;
}

// --- ISRI-style tables ------------------------------------------------------

const u32string kP3[] = {U"كال", U"بال", U"ولل", U"وال"};
const u32string kP2[] = {U"ال", U"لل"};
const u32string kP1 = U"لبفسويتنا";
const u32string kS3[] = {U"تمل", U"همل", U"تان", U"تين", U"كمل"};
const u32string kS2[] = {U"ون", U"ات", U"ان", U"ين", U"تن", U"كم", U"هن", U"نا",
                         U"يا", U"ها", U"تم", U"كن", U"ني", U"وا", U"ما", U"هم"};
const u32string kS1 = U"ةهيكتان";

// Letter classes indexed by position for the length-4 patterns.
const u32string kPat4[4] = {U"م", U"ا", U"او", U"ة"};
// Letter classes shared by the length-5 pattern rules.
const u32string kPat53[7] = {U"ات", U"ايو", U"اتم", U"ميت", U"مت", U"او", U"ام"};

bool in_class(char32_t cp, const u32string& cls) { return cls.find(cp) != u32string::npos; }

u32string strip_diacritics(u32string word) {
  std::erase_if(word, is_diacritic);
  return word;
}

u32string normalize_initial_hamza(u32string word) {
  if (!word.empty() && (word[0] == 0x0622 || word[0] == 0x0623 || word[0] == 0x0625)) {
    word[0] = 0x0627;  // bare alef
  }
  return word;
}

u32string strip_prefix32(u32string word) {
  if (word.size() >= 6) {
    for (const auto& p : kP3)
      if (starts_with(word, p)) return word.substr(3);
  }
  if (word.size() >= 5) {
    for (const auto& p : kP2)
      if (starts_with(word, p)) return word.substr(2);
  }
  return word;
}

u32string strip_suffix32(u32string word) {
  if (word.size() >= 6) {
    for (const auto& s : kS3)
      if (ends_with(word, s)) return word.substr(0, word.size() - 3);
  }
  if (word.size() >= 5) {
    for (const auto& s : kS2)
      if (ends_with(word, s)) return word.substr(0, word.size() - 2);
  }
  return word;
}

u32string strip_connective_waw(u32string word) {
  if (word.size() >= 4 && word[0] == U'و' && word[1] == U'و') return word.substr(1);
  return word;
}

u32string suffix1(u32string word) {
  if (!word.empty() && in_class(word.back(), kS1)) word.pop_back();
  return word;
}

u32string prefix1(u32string word) {
  if (!word.empty() && in_class(word.front(), kP1)) word.erase(word.begin());
  return word;
}

u32string match_len4(u32string word) {
  if (in_class(word[0], kPat4[0])) return word.substr(1);                         // مفعل
  if (in_class(word[1], kPat4[1])) return word.substr(0, 1) + word.substr(2);     // فاعل
  if (in_class(word[2], kPat4[2])) return word.substr(0, 2) + word.substr(3);     // فعال فعول
  if (in_class(word[3], kPat4[3])) return word.substr(0, 3);                      // فعلة
  word = suffix1(word);
  if (word.size() == 4) word = prefix1(word);
  return word;
}

// Length-5 patterns reducing to tri-literal roots.
u32string match_len5_tri(u32string word) {
  const auto pick = [&](std::initializer_list<int> keep) {
    u32string r;
    for (int i : keep) r.push_back(word[i]);
    return r;
  };
  if (in_class(word[2], kPat53[0]) && word[0] == U'ا') return pick({1, 3, 4});  // افتعل افاعل
  if (in_class(word[3], kPat53[1]) && word[0] == U'م') return pick({1, 2, 4});  // مفعول مفعال مفعيل
  if (in_class(word[0], kPat53[2]) && word[4] == U'ة') return pick({1, 2, 3});  // مفعلة تفعلة افعلة
  if (in_class(word[0], kPat53[3]) && word[2] == U'ت') return pick({1, 3, 4});  // مفتعل يفتعل تفتعل
  if (in_class(word[0], kPat53[4]) && word[2] == U'ا') return pick({1, 3, 4});  // مفاعل تفاعل
  if (in_class(word[2], kPat53[5]) && word[4] == U'ة') return pick({0, 1, 3});  // فعولة فعالة
  if (in_class(word[0], kPat53[6]) && word[1] == U'ن') return pick({2, 3, 4});  // انفعل منفعل
  if (word[3] == U'ا' && word[0] == U'ا') return pick({1, 2, 4});               // افعال
  if (word[4] == U'ن' && word[3] == U'ا') return pick({0, 1, 2});               // فعلان
  if (word[3] == U'ي' && word[0] == U'ت') return pick({1, 2, 4});               // تفعيل
  if (word[3] == U'و' && word[1] == U'و') return pick({0, 2, 4});               // فوعول
  if (word[2] == U'ا' && word[1] == U'و') return pick({0, 3, 4});               // فواعل
  if (word[3] == U'ئ' && word[2] == U'ا') return pick({0, 1, 4});               // فعائل
  if (word[4] == U'ة' && word[1] == U'ا') return pick({0, 2, 3});               // فاعلة
  if (word[4] == U'ي' && word[2] == U'ا') return pick({0, 1, 3});               // فعالي
  word = suffix1(word);
  if (word.size() == 5) word = prefix1(word);
  return word;
}

// Length-5 patterns reducing to quad-literal roots.
u32string match_len5_quad(u32string word) {
  if (in_class(word[0], kPat53[2])) return word.substr(1);                       // تفعلل افعلل مفعلل
  if (word[4] == U'ة') return word.substr(0, 4);                                 // فعللة
  if (word[2] == U'ا') return word.substr(0, 2) + word.substr(3);                // فعالل
  return word;
}

u32string finish_len5(u32string word) {
  if (word.size() == 4) return match_len4(std::move(word));
  if (word.size() == 5) return match_len5_quad(std::move(word));
  return word;
}

u32string match_len6_tri(u32string word) {
  const auto pick = [&](std::initializer_list<int> keep) {
    u32string r;
    for (int i : keep) r.push_back(word[i]);
    return r;
  };
  if (starts_with(word, U"است") || starts_with(word, U"مست")) return word.substr(3);
  if (word[0] == U'م' && word[3] == U'ا' && word[5] == U'ة') return pick({1, 2, 4});  // مفعالة
  if (word[0] == U'ا' && word[2] == U'ت' && word[4] == U'ا') return pick({1, 3, 5});  // افتعال
  if (word[0] == U'ا' && word[3] == U'و' && word[2] == word[4]) return pick({1, 4, 5});  // افعوعل
  if (word[0] == U'ت' && word[2] == U'ا' && word[4] == U'ي') return pick({1, 3, 5});  // تفاعيل
  word = suffix1(word);
  if (word.size() == 6) word = prefix1(word);
  return word;
}

u32string match_len6_quad(u32string word) {
  if (word[0] == U'ا' && word[4] == U'ا')
    return word.substr(1, 3) + word.substr(5);  // افعلال
  if (starts_with(word, U"مت")) return word.substr(2);  // متفعلل
  return word;
}

u32string finish_len6(u32string word) {
  if (word.size() == 5) {
    word = match_len5_tri(std::move(word));
    word = finish_len5(std::move(word));
  } else if (word.size() == 6) {
    word = match_len6_quad(std::move(word));
  }
  return word;
}

}  // namespace

const StemTables& StemTables::defaults() {
  static const StemTables tables = [] {
    StemTables t;
    t.prefixes = {U"وال", U"فال", U"بال", U"كال", U"لل", U"ال", U"و"};
    t.suffixes = {U"ها", U"ان", U"ات", U"ون", U"ين", U"يه", U"ية", U"ه", U"ة", U"ي"};
    sort_by_length_desc(t.prefixes);
    sort_by_length_desc(t.suffixes);
    return t;
  }();
  return tables;
}

StemTables StemTables::load(const std::filesystem::path& prefix_file,
                            const std::filesystem::path& suffix_file) {
  StemTables t;
  t.prefixes = read_affix_file(prefix_file);
  t.suffixes = read_affix_file(suffix_file);
  sort_by_length_desc(t.prefixes);
  sort_by_length_desc(t.suffixes);
  return t;
}

std::string light_stem(const std::string& token, const StemTables& tables) {
  u32string word = utf8::decode(token);
  for (const auto& p : tables.prefixes) {
    if (starts_with(word, p) && word.size() - p.size() >= 2) {
      word = word.substr(p.size());
      break;
    }
  }
  for (const auto& s : tables.suffixes) {
    if (ends_with(word, s) && word.size() - s.size() >= 2) {
      word = word.substr(0, word.size() - s.size());
      break;
    }
  }
  return utf8::encode(word);
}

std::string IsriRootExtractor::extract(const std::string& token) const {
  u32string word = utf8::compose_arabic(utf8::decode(token));
  word = strip_diacritics(std::move(word));
  if (!contains_arabic(word)) return token;

  word = strip_prefix32(std::move(word));
  word = strip_suffix32(std::move(word));
  word = strip_connective_waw(std::move(word));
  word = normalize_initial_hamza(std::move(word));

  switch (word.size()) {
    case 4:
      word = match_len4(std::move(word));
      break;
    case 5:
      word = match_len5_tri(std::move(word));
      word = finish_len5(std::move(word));
      break;
    case 6:
      word = match_len6_tri(std::move(word));
      word = finish_len6(std::move(word));
      break;
    case 7:
      word = suffix1(std::move(word));
      if (word.size() == 7) word = prefix1(std::move(word));
      if (word.size() == 6) {
        word = match_len6_tri(std::move(word));
        word = finish_len6(std::move(word));
      }
      break;
    default:
      break;
  }
  return utf8::encode(word);
}

const RootExtractor& default_root_extractor() {
  static const IsriRootExtractor extractor;
  return extractor;
}

}  // namespace lsasumm
