#include <cctype>
#include <random>

#include "doctest.h"
#include "puzzle/text/document.h"
#include "puzzle/text/entities.h"
#include "puzzle/text/lexical.h"
#include "test_util.h"

using namespace puzzle;
using namespace puzzle::text;

namespace {

using Strings = std::vector<std::string>;

std::string puzzle_text(const std::string& name) { return testutil::read_file(testutil::corpus_path("puzzles/" + name)); }

Gazetteer gazetteer() { return load_gazetteer(testutil::data_path("lexicon/gazetteer.txt")); }

Strings texts(const Sentence& s) { return s.words(); }

std::string without_space(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Sentences after persons and pronouns are resolved, without punctuation.
std::vector<std::string> resolved(const std::string& text, EntitySet* persons = nullptr) {
  Document d = split_and_tokenize(text);
  EntitySet e = recognize_persons(d, gazetteer());
  d = resolve_coreference(introduce_anonymous_persons(d, e), e);
  if (persons) *persons = e;
  std::vector<std::string> out;
  for (const auto& s : d.sentences) {
    Sentence copy = s;
    copy.tokens.clear();
    for (const auto& t : s.tokens)
      if (!is_quote(t.text) && t.text != "." && t.text != "?") copy.tokens.push_back(t);
    out.push_back(copy.str());
  }
  return out;
}

}  // namespace

TEST_CASE("split_and_tokenize") {
  Document p1 = split_and_tokenize(puzzle_text("p1-marge-homer.txt"));
  CHECK(p1.sentences.size() == 5);
  CHECK(p1.sentences.back().is_question());
  CHECK_FALSE(p1.sentences[0].is_question());

  Document d = split_and_tokenize("Diana is taller than Maria.");
  REQUIRE(d.sentences.size() == 1);
  CHECK(texts(d.sentences[0]) == Strings{"Diana", "is", "taller", "than", "Maria", "."});
  CHECK(d.sentences[0].words(true) == Strings{"Diana", "is", "taller", "than", "Maria"});

  CHECK(split_and_tokenize("").sentences.empty());
  CHECK(split_and_tokenize("  \n ").sentences.empty());

  // Abbreviations do not end sentences; closing quotes stay attached.
  Document abbr = split_and_tokenize("Mr. Smith says: ``I lie.'' Dr. Who is a knave!");
  REQUIRE(abbr.sentences.size() == 2);
  CHECK(texts(abbr.sentences[0]) == Strings{"Mr.", "Smith", "says", ":", "``", "I", "lie", ".", "''"});
  Document p3 = split_and_tokenize(puzzle_text("p3-two-people.txt"));
  REQUIRE(p3.sentences.size() == 3);
  CHECK(texts(p3.sentences[2]) ==
        Strings{"The", "first", "one", "says", ":", "``", "We", "are", "both", "knaves", "''", "."});
  Document p4 = split_and_tokenize(puzzle_text("p4-nine.txt"));
  CHECK(p4.sentences.size() == 12);
  CHECK(p4.sentences.back().tokens.back().text == "\"");
}

TEST_CASE("property: sentence spans cover the raw text") {
  std::mt19937 rng(5);
  const char* pieces[] = {"Alice", "says", "that", ",", ".", "?", "!", ":", "``", "''", "\"", "Mr.", "e.g.", "knave",
                          "  ", "\n", "don't", "(x)"};
  for (int i = 0; i < 300; ++i) {
    std::string text;
    int n = static_cast<int>(rng() % 25);
    for (int k = 0; k < n; ++k) {
      text += pieces[rng() % std::size(pieces)];
      if (rng() % 2) text += ' ';
    }
    Document d = split_and_tokenize(text);
    std::string joined;
    size_t last = 0;
    for (const auto& s : d.sentences)
      for (const auto& t : s.tokens) {
        CHECK(t.begin >= last);
        CHECK(text.substr(t.begin, t.end - t.begin) == t.text);
        joined += t.text;
        last = t.end;
      }
    CHECK(joined == without_space(text));
  }
}

TEST_CASE("recognize_persons") {
  Gazetteer gz = gazetteer();
  CHECK(recognize_persons(split_and_tokenize("You meet two inhabitants: Marge and Homer."), gz).persons ==
        Strings{"Marge", "Homer"});
  CHECK(recognize_persons(split_and_tokenize(puzzle_text("p4-nine.txt")), gz).persons ==
        Strings{"Carl", "Betty", "Ted", "Dave", "Marge", "Alice", "Rex", "Bob", "Sally"});
  CHECK(recognize_persons(split_and_tokenize("knights always tell the truth"), gz).persons.empty());
  // Coordinated names come out one by one.
  CHECK(recognize_persons(split_and_tokenize("You see Ted and Bob."), {}).persons == Strings{"Ted", "Bob"});
  // Sentence-initial names need the gazetteer.
  Document d = split_and_tokenize("Peggy lies. Zorro says that Bozo is a knave.");
  CHECK(recognize_persons(d, {}).persons == Strings{"Bozo"});
  CHECK(recognize_persons(d, gz).persons == Strings{"Peggy", "Bozo"});
  CHECK(recognize_persons(d, parse_gazetteer("# names\nPeggy Zorro\n")).persons == Strings{"Peggy", "Zorro", "Bozo"});
  // "You" addresses the reader.
  CHECK(recognize_persons(split_and_tokenize("Then You meet Ana."), gz).persons == Strings{"Ana"});
}

TEST_CASE("property: recognize_persons ignores repeated sentences") {
  std::mt19937 rng(11);
  std::vector<std::string> sentences = {"You meet Carl and Betty.", "Betty says that Ted lies.", "Ted is a knave.",
                                        "Sally tells you that Carl is a knight.", "Kevin and Ana are knaves."};
  Gazetteer gz = gazetteer();
  for (int i = 0; i < 100; ++i) {
    std::string text, doubled;
    for (int k = 0; k < 4; ++k) {
      const std::string& s = sentences[rng() % sentences.size()];
      text += s + " ";
      doubled += s + " " + s + " ";
    }
    EntitySet a = recognize_persons(split_and_tokenize(text), gz);
    CHECK(a.persons == recognize_persons(split_and_tokenize(doubled), gz).persons);
    // Unique, and ordered by first occurrence in the text.
    size_t last = 0;
    for (const auto& p : a.persons) {
      size_t at = text.find(p);
      REQUIRE(at != std::string::npos);
      CHECK(at >= last);
      last = at;
    }
  }
}

TEST_CASE("resolve_coreference") {
  CHECK(resolved("Alice says that she and Sue are knights.") == Strings{"Alice says that Alice and Sue are knights"});
  auto p1 = resolved(puzzle_text("p1-marge-homer.txt"));
  CHECK(p1[2] == "Marge says that Homer and Marge are both knights or both knaves");
  CHECK(p1[3] == "Homer claims that Marge and Homer are the same");
  auto p4 = resolved(puzzle_text("p4-nine.txt"));
  CHECK(p4[8] == "Rex says that Rex knows that Rex is a knight and that Bob is a knave");
  CHECK(p4[9] == "Bob says that Bob and Rex are both knights or both knaves");
  // Sentence-initial pronouns take the nearest preceding name.
  CHECK(resolved("Ted meets Sue. She says that Ted lies.")[1] == "Sue says that Ted lies");
  CHECK(resolved("Marge is a knave.") == Strings{"Marge is a knave"});

  Document d = split_and_tokenize("He is a knave. They lie.");
  Document r = resolve_coreference(d, EntitySet{});
  REQUIRE(r.sentences.size() == 2);
  CHECK(r.sentences[0].warnings.size() == 1);
  CHECK(r.sentences[1].warnings.size() == 1);
  CHECK(texts(r.sentences[0]) == texts(d.sentences[0]));
}

TEST_CASE("property: coreference keeps sentences and other tokens") {
  std::mt19937 rng(3);
  const char* words[] = {"Alice", "Bob", "he", "she", "him", "her", "says", "that", "is", "a", "knave", "and", ","};
  for (int i = 0; i < 200; ++i) {
    std::string text;
    int sentences = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < sentences; ++s) {
      int n = 1 + static_cast<int>(rng() % 8);
      for (int k = 0; k < n; ++k) text += std::string(words[rng() % std::size(words)]) + " ";
      text += ". ";
    }
    Document d = split_and_tokenize(text);
    EntitySet e = recognize_persons(d, parse_gazetteer("Alice\nBob\n"));
    Document r = resolve_coreference(d, e);
    REQUIRE(r.sentences.size() == d.sentences.size());
    auto keep = [](const Sentence& s) {
      Strings out;
      for (const auto& t : s.tokens)
        if (t.text != "he" && t.text != "she" && t.text != "him" && t.text != "her") out.push_back(t.text);
      return out;
    };
    for (size_t s = 0; s < d.sentences.size(); ++s) {
      CHECK(r.sentences[s].tokens.size() == d.sentences[s].tokens.size());
      // Removing the substituted names from r leaves d's non-pronoun tokens.
      Strings expect = keep(d.sentences[s]);
      Strings got;
      for (size_t k = 0; k < r.sentences[s].tokens.size(); ++k) {
        const std::string& before = d.sentences[s].tokens[k].text;
        if (before == "he" || before == "she" || before == "him" || before == "her") continue;
        got.push_back(r.sentences[s].tokens[k].text);
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("introduce_anonymous_persons") {
  EntitySet e;
  auto sentences = resolved(puzzle_text("p3-two-people.txt"), &e);
  CHECK(e.persons == Strings{"A", "B"});
  CHECK(sentences[1] == "You are approached by two people : A and B");
  CHECK(sentences[2] == "A says : A and B are both knaves");
  auto q = resolved("You are approached by three people. Is the first inhabitant a knave and the third one a knight?");
  CHECK(q[0] == "You are approached by three people : A , B and C");
  CHECK(q[1] == "Is A a knave and C a knight");
  // Named persons leave the text alone.
  EntitySet named{{"Sue"}};
  Document d = split_and_tokenize("You meet two people. Sue lies.");
  CHECK(texts(introduce_anonymous_persons(d, named).sentences[0]) == texts(d.sentences[0]));
}

TEST_CASE("lemmatize") {
  CHECK(lemmatize("says", 'v') == "say");
  CHECK(lemmatize("claims", 'v') == "claim");
  CHECK(lemmatize("tells", 'v') == "tell");
  CHECK(lemmatize("lies", 'v') == "lie");
  CHECK(lemmatize("lies", 'n') == "lie");
  CHECK(lemmatize("is", 'v') == "be");
  CHECK(lemmatize("are", 'v') == "be");
  CHECK(lemmatize("knights", 'n') == "knight");
  CHECK(lemmatize("knight", 'n') == "knight");
  CHECK(lemmatize("Knaves", 'n') == "knave");
  CHECK(lemmatize("inhabitants", 'n') == "inhabitant");
  CHECK(lemmatize("people", 'n') == "person");
  CHECK(lemmatize("stated", 'v') == "state");
  CHECK(lemmatize("replied", 'v') == "reply");
  CHECK(lemmatize("taller", 'a') == "taller");
  CHECK(lemmatize("always", 'r') == "always");
  CHECK(lemmatize("boxes", 'n') == "box");
  CHECK(lemmatize("class", 'n') == "class");
}

TEST_CASE("property: lemmatize is idempotent") {
  std::mt19937 rng(9);
  const char* stems[] = {"say", "claim", "lie", "knav", "box", "stat", "stop", "cr", "ies", "us", "is", "ss", "e"};
  const char* suffixes[] = {"", "s", "es", "ies", "ed", "ing", "eds", "ings", "sses", "y"};
  for (int i = 0; i < 2000; ++i) {
    std::string w = std::string(stems[rng() % std::size(stems)]) + suffixes[rng() % std::size(suffixes)] +
                    suffixes[rng() % std::size(suffixes)];
    for (char pos : {'n', 'v', 'a', 'r', '\0'}) {
      std::string once = lemmatize(w, pos);
      CHECK_MESSAGE(lemmatize(once, pos) == once, w << " " << pos);
    }
  }
}

TEST_CASE("guess_pos") {
  Document d = split_and_tokenize("Sue claims that the state is a knave. You will state it.");
  EntitySet e{{"Sue"}};
  const Sentence& s = d.sentences[0];
  CHECK(guess_pos(s, 1, e) == 'v');  // claims
  CHECK(guess_pos(s, 4, e) == 'n');  // state
  CHECK(guess_pos(d.sentences[1], 2, e) == 'v');
  CHECK(guess_pos(s, 2, e) == 0);
  auto tagged = tagged_words(d, e);
  CHECK(tagged.front().word == "claims");
}

TEST_CASE("detect_synonym_pairs") {
  grammar::Grammar base = grammar::load_grammar(testutil::data_path("grammars/knights-knaves.fcfg"));
  grammar::SynonymDb db = grammar::load_synonyms(testutil::data_path("lexicon/synonyms.txt"));
  auto prepare = [&](const std::string& text) {
    Document d = split_and_tokenize(text);
    EntitySet e = recognize_persons(d, gazetteer());
    d = resolve_coreference(d, e);
    grammar::Grammar g = grammar::add_proper_nouns(base, e.persons);
    g = grammar::extend_lexicon(g, db, tagged_words(d, e), lemmatize).grammar;
    return detect_synonym_pairs(d, g, db);
  };
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  CHECK(prepare(puzzle_text("p2-sue-alice.txt")) == Pairs{{"claim", "say"}});
  CHECK(prepare(puzzle_text("p1-marge-homer.txt")) == Pairs{{"claim", "say"}});
  CHECK(prepare("Marge says that Homer is a knave.").empty());
  CHECK(prepare(puzzle_text("p4-nine.txt")) == Pairs{{"claim", "say"}, {"say", "tell"}});

  // Noun "state" never links to the verb "say".
  grammar::Grammar g = grammar::parse_grammar_file(R"(% open PropN
S -> NP SV 'that' S | NP 'is' 'a' N
S -> 'ok'
NP -> PropN
SV[SEM=<\x p.(say(x) <-> p)>] -> 'says'
N[SEM=<\x.state(x)>] -> 'state'
)");
  CHECK(detect_synonym_pairs(split_and_tokenize("Sue is a state. Ted says that ok."), g,
                             grammar::parse_synonyms("say v state\n"))
            .empty());
}

TEST_CASE("property: synonym pairs are ordered and unique") {
  std::mt19937 rng(21);
  grammar::Grammar g = grammar::parse_grammar_file(R"(S -> W S | W
W[SEM=<\x.a(x)>] -> 'a' | 'b' | 'c' | 'd' | 'e'
)");
  for (int i = 0; i < 200; ++i) {
    grammar::SynonymDb db;
    const char* lemmas[] = {"a", "b", "c", "d", "e", "f"};
    for (int k = 0; k < 6; ++k) db.add(lemmas[rng() % 6], lemmas[rng() % 6], 'v');
    std::string text;
    for (int k = 0; k < 5; ++k) text += std::string(lemmas[rng() % 6]) + " ";
    g.set_pos("W", 'v');
    auto pairs = detect_synonym_pairs(split_and_tokenize(text), g, db);
    for (size_t k = 0; k < pairs.size(); ++k) {
      CHECK(pairs[k].first < pairs[k].second);
      CHECK(db.linked(pairs[k].first, pairs[k].second, 'v'));
      if (k > 0) CHECK(pairs[k - 1] < pairs[k]);
    }
  }
}
