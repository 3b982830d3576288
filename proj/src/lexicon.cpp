#include "attnmod/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace attnmod {

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::DET: return "DET";
    case Tag::ADJ: return "ADJ";
    case Tag::NOUN: return "NOUN";
    case Tag::NUM: return "NUM";
    case Tag::PREP: return "PREP";
    case Tag::VERB: return "VERB";
    case Tag::CONJ: return "CONJ";
    case Tag::OTHER: return "OTHER";
  }
  return "OTHER";
}

Tag tag_from_name(const std::string& name) {
  if (name == "DET") return Tag::DET;
  if (name == "ADJ") return Tag::ADJ;
  if (name == "NOUN") return Tag::NOUN;
  if (name == "NUM") return Tag::NUM;
  if (name == "PREP") return Tag::PREP;
  if (name == "VERB") return Tag::VERB;
  if (name == "CONJ") return Tag::CONJ;
  if (name == "OTHER") return Tag::OTHER;
  throw ConfigError("unknown part-of-speech tag: " + name);
}

namespace {

struct Entry {
  const char* word;
  Tag tag;
};

// Caption-English table. "front" is filed under PREP so that "in front of"
// stays layout information instead of becoming a noun chunk; "wearing" and
// "holding" are filed under PREP because they act as attachment heads in
// the entity grammar.
constexpr Entry kBuiltin[] = {
    // determiners and quantifiers
    {"a", Tag::DET}, {"an", Tag::DET}, {"the", Tag::DET}, {"this", Tag::DET},
    {"that", Tag::DET}, {"these", Tag::DET}, {"those", Tag::DET},
    {"its", Tag::DET}, {"his", Tag::DET}, {"her", Tag::DET},
    {"their", Tag::DET}, {"some", Tag::DET}, {"several", Tag::DET},
    {"many", Tag::DET}, {"few", Tag::DET}, {"each", Tag::DET},
    {"every", Tag::DET}, {"both", Tag::DET}, {"all", Tag::DET},
    // numerals
    {"one", Tag::NUM}, {"two", Tag::NUM}, {"three", Tag::NUM},
    {"four", Tag::NUM}, {"five", Tag::NUM}, {"six", Tag::NUM},
    {"seven", Tag::NUM}, {"eight", Tag::NUM}, {"nine", Tag::NUM},
    {"ten", Tag::NUM}, {"eleven", Tag::NUM}, {"twelve", Tag::NUM},
    // prepositions and layout words
    {"in", Tag::PREP}, {"on", Tag::PREP}, {"of", Tag::PREP}, {"at", Tag::PREP},
    {"by", Tag::PREP}, {"with", Tag::PREP}, {"from", Tag::PREP},
    {"to", Tag::PREP}, {"under", Tag::PREP}, {"over", Tag::PREP},
    {"above", Tag::PREP}, {"below", Tag::PREP}, {"behind", Tag::PREP},
    {"beside", Tag::PREP}, {"near", Tag::PREP}, {"inside", Tag::PREP},
    {"outside", Tag::PREP}, {"front", Tag::PREP}, {"between", Tag::PREP},
    {"among", Tag::PREP}, {"through", Tag::PREP}, {"across", Tag::PREP},
    {"against", Tag::PREP}, {"along", Tag::PREP}, {"around", Tag::PREP},
    {"atop", Tag::PREP}, {"upon", Tag::PREP}, {"onto", Tag::PREP},
    {"into", Tag::PREP}, {"beneath", Tag::PREP}, {"during", Tag::PREP},
    {"without", Tag::PREP}, {"within", Tag::PREP}, {"beyond", Tag::PREP},
    {"past", Tag::PREP}, {"toward", Tag::PREP}, {"towards", Tag::PREP},
    {"up", Tag::PREP}, {"down", Tag::PREP}, {"off", Tag::PREP},
    {"out", Tag::PREP}, {"wearing", Tag::PREP}, {"holding", Tag::PREP},
    // conjunctions
    {"and", Tag::CONJ}, {"or", Tag::CONJ}, {"but", Tag::CONJ},
    {"nor", Tag::CONJ}, {"while", Tag::CONJ},
    // verbs
    {"is", Tag::VERB}, {"are", Tag::VERB}, {"was", Tag::VERB},
    {"were", Tag::VERB}, {"be", Tag::VERB}, {"been", Tag::VERB},
    {"being", Tag::VERB}, {"am", Tag::VERB}, {"has", Tag::VERB},
    {"have", Tag::VERB}, {"had", Tag::VERB}, {"do", Tag::VERB},
    {"does", Tag::VERB}, {"did", Tag::VERB}, {"can", Tag::VERB},
    {"could", Tag::VERB}, {"will", Tag::VERB}, {"would", Tag::VERB},
    {"sit", Tag::VERB}, {"sits", Tag::VERB}, {"sitting", Tag::VERB},
    {"sat", Tag::VERB}, {"stand", Tag::VERB}, {"stands", Tag::VERB},
    {"standing", Tag::VERB}, {"stood", Tag::VERB}, {"walk", Tag::VERB},
    {"walks", Tag::VERB}, {"walking", Tag::VERB}, {"walked", Tag::VERB},
    {"run", Tag::VERB}, {"runs", Tag::VERB}, {"running", Tag::VERB},
    {"ran", Tag::VERB}, {"fly", Tag::VERB}, {"flies", Tag::VERB},
    {"flying", Tag::VERB}, {"flew", Tag::VERB}, {"perch", Tag::VERB},
    {"perches", Tag::VERB}, {"perched", Tag::VERB}, {"perching", Tag::VERB},
    {"cross", Tag::VERB}, {"crosses", Tag::VERB}, {"crossing", Tag::VERB},
    {"crossed", Tag::VERB}, {"eat", Tag::VERB}, {"eats", Tag::VERB},
    {"eating", Tag::VERB}, {"ate", Tag::VERB}, {"drink", Tag::VERB},
    {"drinks", Tag::VERB}, {"drinking", Tag::VERB}, {"drank", Tag::VERB},
    {"sleep", Tag::VERB}, {"sleeps", Tag::VERB}, {"sleeping", Tag::VERB},
    {"play", Tag::VERB}, {"plays", Tag::VERB}, {"playing", Tag::VERB},
    {"played", Tag::VERB}, {"ride", Tag::VERB}, {"rides", Tag::VERB},
    {"riding", Tag::VERB}, {"rode", Tag::VERB}, {"look", Tag::VERB},
    {"looks", Tag::VERB}, {"looking", Tag::VERB}, {"looked", Tag::VERB},
    {"watch", Tag::VERB}, {"watches", Tag::VERB}, {"watching", Tag::VERB},
    {"jump", Tag::VERB}, {"jumps", Tag::VERB}, {"jumping", Tag::VERB},
    {"jumped", Tag::VERB}, {"lay", Tag::VERB}, {"lays", Tag::VERB},
    {"laying", Tag::VERB}, {"lie", Tag::VERB}, {"lies", Tag::VERB},
    {"lying", Tag::VERB}, {"graze", Tag::VERB}, {"grazes", Tag::VERB},
    {"grazing", Tag::VERB}, {"swim", Tag::VERB}, {"swims", Tag::VERB},
    {"swimming", Tag::VERB}, {"drive", Tag::VERB}, {"drives", Tag::VERB},
    {"driving", Tag::VERB}, {"drove", Tag::VERB}, {"park", Tag::VERB},
    {"parks", Tag::VERB}, {"parking", Tag::VERB}, {"parked", Tag::VERB},
    {"hold", Tag::VERB}, {"holds", Tag::VERB}, {"held", Tag::VERB},
    {"wear", Tag::VERB}, {"wears", Tag::VERB}, {"wore", Tag::VERB},
    {"carry", Tag::VERB}, {"carries", Tag::VERB}, {"carrying", Tag::VERB},
    {"hang", Tag::VERB}, {"hangs", Tag::VERB}, {"hanging", Tag::VERB},
    {"hung", Tag::VERB}, {"lean", Tag::VERB}, {"leaning", Tag::VERB},
    {"rest", Tag::VERB}, {"rests", Tag::VERB}, {"resting", Tag::VERB},
    {"surf", Tag::VERB}, {"surfing", Tag::VERB}, {"ski", Tag::VERB},
    {"skiing", Tag::VERB}, {"skate", Tag::VERB}, {"skating", Tag::VERB},
    {"catch", Tag::VERB}, {"catching", Tag::VERB}, {"throw", Tag::VERB},
    {"throwing", Tag::VERB}, {"kick", Tag::VERB}, {"kicking", Tag::VERB},
    {"talk", Tag::VERB}, {"talking", Tag::VERB}, {"smile", Tag::VERB},
    {"smiling", Tag::VERB}, {"covered", Tag::VERB}, {"filled", Tag::VERB},
    {"fill", Tag::VERB}, {"fills", Tag::VERB},
    // adjectives
    {"white", Tag::ADJ}, {"black", Tag::ADJ}, {"red", Tag::ADJ},
    {"blue", Tag::ADJ}, {"green", Tag::ADJ}, {"yellow", Tag::ADJ},
    {"brown", Tag::ADJ}, {"gray", Tag::ADJ}, {"grey", Tag::ADJ},
    {"orange", Tag::ADJ}, {"purple", Tag::ADJ}, {"pink", Tag::ADJ},
    {"golden", Tag::ADJ}, {"silver", Tag::ADJ}, {"young", Tag::ADJ},
    {"old", Tag::ADJ}, {"big", Tag::ADJ}, {"small", Tag::ADJ},
    {"large", Tag::ADJ}, {"little", Tag::ADJ}, {"tall", Tag::ADJ},
    {"short", Tag::ADJ}, {"long", Tag::ADJ}, {"tiny", Tag::ADJ},
    {"huge", Tag::ADJ}, {"giant", Tag::ADJ}, {"grassy", Tag::ADJ},
    {"furry", Tag::ADJ}, {"fluffy", Tag::ADJ}, {"cute", Tag::ADJ},
    {"happy", Tag::ADJ}, {"sad", Tag::ADJ}, {"bright", Tag::ADJ},
    {"dark", Tag::ADJ}, {"shiny", Tag::ADJ}, {"dirty", Tag::ADJ},
    {"clean", Tag::ADJ}, {"fresh", Tag::ADJ}, {"colorful", Tag::ADJ},
    {"striped", Tag::ADJ}, {"spotted", Tag::ADJ}, {"stuffed", Tag::ADJ},
    {"open", Tag::ADJ}, {"closed", Tag::ADJ}, {"empty", Tag::ADJ},
    {"full", Tag::ADJ}, {"busy", Tag::ADJ}, {"crowded", Tag::ADJ},
    {"beautiful", Tag::ADJ}, {"pretty", Tag::ADJ}, {"nice", Tag::ADJ},
    {"wet", Tag::ADJ}, {"dry", Tag::ADJ}, {"hot", Tag::ADJ},
    {"cold", Tag::ADJ}, {"warm", Tag::ADJ}, {"sunny", Tag::ADJ},
    {"cloudy", Tag::ADJ}, {"rainy", Tag::ADJ}, {"snowy", Tag::ADJ},
    {"wooden", Tag::ADJ}, {"next", Tag::ADJ},
    // nouns
    {"boy", Tag::NOUN}, {"boys", Tag::NOUN}, {"girl", Tag::NOUN},
    {"girls", Tag::NOUN}, {"man", Tag::NOUN}, {"men", Tag::NOUN},
    {"woman", Tag::NOUN}, {"women", Tag::NOUN}, {"female", Tag::NOUN},
    {"male", Tag::NOUN}, {"person", Tag::NOUN}, {"people", Tag::NOUN},
    {"child", Tag::NOUN}, {"children", Tag::NOUN}, {"kid", Tag::NOUN},
    {"kids", Tag::NOUN}, {"baby", Tag::NOUN}, {"lady", Tag::NOUN},
    {"guy", Tag::NOUN}, {"cat", Tag::NOUN}, {"cats", Tag::NOUN},
    {"dog", Tag::NOUN}, {"dogs", Tag::NOUN}, {"bird", Tag::NOUN},
    {"birds", Tag::NOUN}, {"giraffe", Tag::NOUN}, {"giraffes", Tag::NOUN},
    {"zebra", Tag::NOUN}, {"zebras", Tag::NOUN}, {"horse", Tag::NOUN},
    {"horses", Tag::NOUN}, {"sheep", Tag::NOUN}, {"cow", Tag::NOUN},
    {"cows", Tag::NOUN}, {"elephant", Tag::NOUN}, {"elephants", Tag::NOUN},
    {"bear", Tag::NOUN}, {"bears", Tag::NOUN}, {"hat", Tag::NOUN},
    {"hats", Tag::NOUN}, {"field", Tag::NOUN}, {"fields", Tag::NOUN},
    {"path", Tag::NOUN}, {"paths", Tag::NOUN}, {"zoo", Tag::NOUN},
    {"enclosure", Tag::NOUN}, {"gutter", Tag::NOUN}, {"building", Tag::NOUN},
    {"buildings", Tag::NOUN}, {"table", Tag::NOUN}, {"tables", Tag::NOUN},
    {"chair", Tag::NOUN}, {"chairs", Tag::NOUN}, {"couch", Tag::NOUN},
    {"bed", Tag::NOUN}, {"desk", Tag::NOUN}, {"bench", Tag::NOUN},
    {"flower", Tag::NOUN}, {"flowers", Tag::NOUN}, {"tree", Tag::NOUN},
    {"trees", Tag::NOUN}, {"grass", Tag::NOUN}, {"sky", Tag::NOUN},
    {"water", Tag::NOUN}, {"sand", Tag::NOUN}, {"beach", Tag::NOUN},
    {"ocean", Tag::NOUN}, {"sea", Tag::NOUN}, {"river", Tag::NOUN},
    {"lake", Tag::NOUN}, {"mountain", Tag::NOUN}, {"hill", Tag::NOUN},
    {"street", Tag::NOUN}, {"road", Tag::NOUN}, {"sidewalk", Tag::NOUN},
    {"city", Tag::NOUN}, {"town", Tag::NOUN}, {"car", Tag::NOUN},
    {"cars", Tag::NOUN}, {"bus", Tag::NOUN}, {"buses", Tag::NOUN},
    {"truck", Tag::NOUN}, {"train", Tag::NOUN}, {"plane", Tag::NOUN},
    {"airplane", Tag::NOUN}, {"boat", Tag::NOUN}, {"bike", Tag::NOUN},
    {"bicycle", Tag::NOUN}, {"motorcycle", Tag::NOUN}, {"pizza", Tag::NOUN},
    {"sandwich", Tag::NOUN}, {"cake", Tag::NOUN}, {"food", Tag::NOUN},
    {"plate", Tag::NOUN}, {"bowl", Tag::NOUN}, {"cup", Tag::NOUN},
    {"bottle", Tag::NOUN}, {"glass", Tag::NOUN}, {"fork", Tag::NOUN},
    {"knife", Tag::NOUN}, {"spoon", Tag::NOUN}, {"laptop", Tag::NOUN},
    {"phone", Tag::NOUN}, {"computer", Tag::NOUN}, {"clock", Tag::NOUN},
    {"vase", Tag::NOUN}, {"book", Tag::NOUN}, {"books", Tag::NOUN},
    {"ball", Tag::NOUN}, {"kite", Tag::NOUN}, {"skateboard", Tag::NOUN},
    {"surfboard", Tag::NOUN}, {"umbrella", Tag::NOUN}, {"bag", Tag::NOUN},
    {"backpack", Tag::NOUN}, {"room", Tag::NOUN}, {"kitchen", Tag::NOUN},
    {"bathroom", Tag::NOUN}, {"bedroom", Tag::NOUN}, {"window", Tag::NOUN},
    {"door", Tag::NOUN}, {"wall", Tag::NOUN}, {"floor", Tag::NOUN},
    {"roof", Tag::NOUN}, {"fence", Tag::NOUN}, {"shirt", Tag::NOUN},
    {"jacket", Tag::NOUN}, {"dress", Tag::NOUN}, {"shoes", Tag::NOUN},
    {"pants", Tag::NOUN}, {"jeans", Tag::NOUN}, {"face", Tag::NOUN},
    {"hair", Tag::NOUN}, {"hand", Tag::NOUN}, {"hands", Tag::NOUN},
    {"head", Tag::NOUN}, {"eyes", Tag::NOUN}, {"group", Tag::NOUN},
    {"crowd", Tag::NOUN}, {"herd", Tag::NOUN}, {"flock", Tag::NOUN},
    {"pair", Tag::NOUN}, {"banana", Tag::NOUN}, {"apple", Tag::NOUN},
    {"sign", Tag::NOUN}, {"light", Tag::NOUN}, {"lights", Tag::NOUN},
    {"pole", Tag::NOUN}, {"snow", Tag::NOUN}, {"rain", Tag::NOUN},
    {"sun", Tag::NOUN}, {"moon", Tag::NOUN}, {"cloud", Tag::NOUN},
    {"clouds", Tag::NOUN}, {"wave", Tag::NOUN}, {"waves", Tag::NOUN},
    {"rock", Tag::NOUN}, {"rocks", Tag::NOUN}, {"stone", Tag::NOUN},
    {"metal", Tag::NOUN}, {"wood", Tag::NOUN}, {"top", Tag::NOUN},
    {"side", Tag::NOUN}, {"bottom", Tag::NOUN}, {"middle", Tag::NOUN},
    {"edge", Tag::NOUN}, {"corner", Tag::NOUN}, {"back", Tag::NOUN},
};

bool all_digits(const std::string& word) {
  if (word.empty()) return false;
  for (unsigned char c : word) {
    if (!std::isdigit(c)) return false;
  }
  return true;
}

}  // namespace

const Lexicon& Lexicon::builtin() {
  static const Lexicon instance = [] {
    Lexicon lex;
    for (const Entry& e : kBuiltin) lex.set(e.word, e.tag);
    return lex;
  }();
  return instance;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": expected `word<TAB>TAG`");
    }
    lex.set(line.substr(0, tab), tag_from_name(line.substr(tab + 1)));
  }
  return lex;
}

Tag Lexicon::lookup(const std::string& word) const {
  if (all_digits(word)) return Tag::NUM;
  const auto it = words_.find(word);
  return it == words_.end() ? Tag::NOUN : it->second;
}

}  // namespace attnmod
