// Copyright 2026 The Essentia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "essentia/verb_lexicon.h"

#include <array>
#include <fstream>

#include "essentia/corpus.h"
#include "essentia/error.h"

namespace essentia {
namespace {

// Verbs inflected with the regular rules.
constexpr std::string_view kRegularVerbs[] = {
    "accept",     "access",    "accommodate", "accompany", "achieve",
    "acquire",    "act",       "add",         "adjust",    "admire",
    "admit",      "adopt",     "advise",      "afford",    "agree",
    "aim",        "allow",     "alter",       "amend",     "announce",
    "answer",     "apologize", "appear",      "apply",     "appoint",
    "appreciate", "approach",  "approve",     "argue",     "arrange",
    "arrive",     "ask",       "assign",      "assist",    "assume",
    "attach",     "attack",    "attempt",     "attend",    "attract",
    "avoid",      "bake",      "balance",     "ban",       "bathe",
    "beg",        "behave",    "believe",     "belong",    "boil",
    "book",       "borrow",    "bother",      "bounce",    "brush",
    "burn",       "bury",      "calculate",   "call",      "calm",
    "cancel",     "care",      "carry",       "cause",     "celebrate",
    "change",     "charge",    "chase",       "chat",      "check",
    "cheer",      "chew",      "clean",       "clear",     "climb",
    "close",      "collect",   "combine",     "comment",   "commit",
    "compare",    "compete",   "complain",    "complete",  "concern",
    "confirm",    "connect",   "consider",    "consist",   "contact",
    "contain",    "continue",  "control",     "convert",   "cook",
    "copy",       "correct",   "count",       "cover",     "crash",
    "create",     "cross",     "cry",         "damage",    "dance",
    "decide",     "declare",   "decline",     "decorate",  "decrease",
    "defend",     "delay",     "delete",      "deliver",   "demand",
    "deny",       "depart",    "depend",      "describe",  "deserve",
    "design",     "desire",    "destroy",     "detect",    "develop",
    "die",        "direct",    "disagree",    "disappear", "discover",
    "discuss",    "dislike",   "display",     "divide",    "download",
    "drag",       "drop",      "dry",         "earn",      "edit",
    "educate",    "employ",    "empty",       "enable",    "encourage",
    "end",        "enjoy",     "enter",       "entertain", "escape",
    "establish",  "estimate",  "evaluate",    "examine",   "exchange",
    "excuse",     "exist",     "expand",      "expect",    "explain",
    "explore",    "express",   "extend",      "fail",      "fancy",
    "fasten",     "fetch",     "fill",        "finish",    "fix",
    "flash",      "float",     "flow",        "fold",      "follow",
    "force",      "form",      "forward",     "fry",       "gather",
    "grab",       "greet",     "guarantee",   "guard",     "guess",
    "guide",      "hail",      "hand",        "handle",    "happen",
    "hate",       "head",      "heat",        "help",      "hire",
    "hook",       "hop",       "hope",        "host",      "hug",
    "hunt",       "hurry",     "identify",    "ignore",    "imagine",
    "improve",    "include",   "increase",    "indicate",  "inform",
    "install",    "instruct",  "intend",      "introduce", "invent",
    "invite",     "involve",   "iron",        "join",      "joke",
    "judge",      "jump",      "kick",        "kill",      "kiss",
    "knock",      "land",      "last",        "laugh",     "launch",
    "learn",      "like",      "limit",       "link",      "list",
    "listen",     "live",      "load",        "locate",    "lock",
    "log",        "look",      "love",        "maintain",  "manage",
    "mark",       "marry",     "match",       "matter",    "measure",
    "memorize",   "mention",   "mind",        "miss",      "mix",
    "modify",     "monitor",   "move",        "name",      "navigate",
    "need",       "note",      "notice",      "notify",    "obtain",
    "occupy",     "occur",     "offer",       "open",      "operate",
    "order",      "organize",  "own",         "pack",      "park",
    "pass",       "paste",     "pause",       "perform",   "permit",
    "pick",       "place",     "plan",        "plant",     "play",
    "please",     "plug",      "point",       "possess",   "post",
    "pour",       "practice",  "pray",        "prefer",    "prepare",
    "present",    "preserve",  "press",       "pretend",   "prevent",
    "print",      "proceed",   "process",     "produce",   "promise",
    "protect",    "provide",   "pull",        "pump",      "punch",
    "purchase",   "push",      "queue",       "question",  "rain",
    "raise",      "rate",      "reach",       "realize",   "receive",
    "recognize",  "recommend", "record",      "recover",   "reduce",
    "refer",      "reflect",   "refresh",     "refund",    "refuse",
    "register",   "reject",    "relax",       "release",   "rely",
    "remain",     "remember",  "remind",      "remove",    "renew",
    "rent",       "repair",    "repeat",      "replace",   "reply",
    "report",     "request",   "require",     "rescue",    "reserve",
    "reset",      "resolve",   "rest",        "restart",   "restore",
    "return",     "reveal",    "review",      "rob",       "roll",
    "rub",        "ruin",      "rush",        "sail",      "satisfy",
    "save",       "scan",      "schedule",    "score",     "scream",
    "search",     "secure",    "select",      "serve",     "settle",
    "share",      "shave",     "ship",        "shop",      "shout",
    "shrug",      "sign",      "signal",      "skip",      "slip",
    "smell",      "smile",     "smoke",       "snow",      "solve",
    "sort",       "spell",     "spoil",       "start",     "stay",
    "step",       "stop",      "store",       "stream",    "stretch",
    "study",      "submit",    "succeed",     "suffer",    "suggest",
    "supply",     "support",   "suppose",     "surprise",  "switch",
    "talk",       "taste",     "thank",       "tick",      "tie",
    "tip",        "top",       "touch",       "tour",      "tow",
    "trace",      "track",     "train",       "transfer",  "translate",
    "transport",  "travel",    "treat",       "trust",     "try",
    "turn",       "type",      "unlock",      "unpack",    "update",
    "upgrade",    "upload",    "use",         "vacuum",    "validate",
    "value",      "verify",    "visit",       "vote",      "wait",
    "walk",       "want",      "warm",        "warn",      "wash",
    "waste",      "watch",     "wave",        "weigh",     "welcome",
    "whisper",    "wish",      "wonder",      "work",      "worry",
    "wrap",       "yell",      "zip",
};

struct IrregularVerb {
  std::string_view base;
  std::string_view past;
  std::string_view participle;
};

constexpr IrregularVerb kIrregularVerbs[] = {
    {"arise", "arose", "arisen"},
    {"awake", "awoke", "awoken"},
    {"bear", "bore", "borne"},
    {"beat", "beat", "beaten"},
    {"become", "became", "become"},
    {"begin", "began", "begun"},
    {"bend", "bent", "bent"},
    {"bet", "bet", "bet"},
    {"bind", "bound", "bound"},
    {"bite", "bit", "bitten"},
    {"bleed", "bled", "bled"},
    {"blow", "blew", "blown"},
    {"break", "broke", "broken"},
    {"breed", "bred", "bred"},
    {"bring", "brought", "brought"},
    {"build", "built", "built"},
    {"burst", "burst", "burst"},
    {"buy", "bought", "bought"},
    {"catch", "caught", "caught"},
    {"choose", "chose", "chosen"},
    {"cling", "clung", "clung"},
    {"come", "came", "come"},
    {"cost", "cost", "cost"},
    {"creep", "crept", "crept"},
    {"cut", "cut", "cut"},
    {"deal", "dealt", "dealt"},
    {"dig", "dug", "dug"},
    {"draw", "drew", "drawn"},
    {"dream", "dreamt", "dreamt"},
    {"drink", "drank", "drunk"},
    {"drive", "drove", "driven"},
    {"eat", "ate", "eaten"},
    {"fall", "fell", "fallen"},
    {"feed", "fed", "fed"},
    {"feel", "felt", "felt"},
    {"fight", "fought", "fought"},
    {"find", "found", "found"},
    {"flee", "fled", "fled"},
    {"fly", "flew", "flown"},
    {"forbid", "forbade", "forbidden"},
    {"forget", "forgot", "forgotten"},
    {"forgive", "forgave", "forgiven"},
    {"freeze", "froze", "frozen"},
    {"get", "got", "gotten"},
    {"give", "gave", "given"},
    {"go", "went", "gone"},
    {"grind", "ground", "ground"},
    {"grow", "grew", "grown"},
    {"hang", "hung", "hung"},
    {"have", "had", "had"},
    {"hear", "heard", "heard"},
    {"hide", "hid", "hidden"},
    {"hit", "hit", "hit"},
    {"hold", "held", "held"},
    {"hurt", "hurt", "hurt"},
    {"keep", "kept", "kept"},
    {"kneel", "knelt", "knelt"},
    {"know", "knew", "known"},
    {"lay", "laid", "laid"},
    {"lead", "led", "led"},
    {"lean", "leant", "leant"},
    {"leap", "leapt", "leapt"},
    {"leave", "left", "left"},
    {"lend", "lent", "lent"},
    {"let", "let", "let"},
    {"lie", "lay", "lain"},
    {"light", "lit", "lit"},
    {"lose", "lost", "lost"},
    {"make", "made", "made"},
    {"mean", "meant", "meant"},
    {"meet", "met", "met"},
    {"mislay", "mislaid", "mislaid"},
    {"mistake", "mistook", "mistaken"},
    {"overcome", "overcame", "overcome"},
    {"oversleep", "overslept", "overslept"},
    {"pay", "paid", "paid"},
    {"prove", "proved", "proven"},
    {"put", "put", "put"},
    {"quit", "quit", "quit"},
    {"read", "read", "read"},
    {"rebuild", "rebuilt", "rebuilt"},
    {"redo", "redid", "redone"},
    {"rethink", "rethought", "rethought"},
    {"rid", "rid", "rid"},
    {"ride", "rode", "ridden"},
    {"ring", "rang", "rung"},
    {"rise", "rose", "risen"},
    {"run", "ran", "run"},
    {"say", "said", "said"},
    {"see", "saw", "seen"},
    {"seek", "sought", "sought"},
    {"sell", "sold", "sold"},
    {"send", "sent", "sent"},
    {"set", "set", "set"},
    {"sew", "sewed", "sewn"},
    {"shake", "shook", "shaken"},
    {"shine", "shone", "shone"},
    {"shoot", "shot", "shot"},
    {"show", "showed", "shown"},
    {"shrink", "shrank", "shrunk"},
    {"shut", "shut", "shut"},
    {"sing", "sang", "sung"},
    {"sink", "sank", "sunk"},
    {"sit", "sat", "sat"},
    {"sleep", "slept", "slept"},
    {"slide", "slid", "slid"},
    {"speak", "spoke", "spoken"},
    {"speed", "sped", "sped"},
    {"spend", "spent", "spent"},
    {"spin", "spun", "spun"},
    {"split", "split", "split"},
    {"spread", "spread", "spread"},
    {"spring", "sprang", "sprung"},
    {"stand", "stood", "stood"},
    {"steal", "stole", "stolen"},
    {"stick", "stuck", "stuck"},
    {"sting", "stung", "stung"},
    {"strike", "struck", "struck"},
    {"swear", "swore", "sworn"},
    {"sweep", "swept", "swept"},
    {"swim", "swam", "swum"},
    {"swing", "swung", "swung"},
    {"take", "took", "taken"},
    {"teach", "taught", "taught"},
    {"tear", "tore", "torn"},
    {"tell", "told", "told"},
    {"think", "thought", "thought"},
    {"throw", "threw", "thrown"},
    {"undergo", "underwent", "undergone"},
    {"understand", "understood", "understood"},
    {"undo", "undid", "undone"},
    {"upset", "upset", "upset"},
    {"wake", "woke", "woken"},
    {"wear", "wore", "worn"},
    {"weep", "wept", "wept"},
    {"win", "won", "won"},
    {"wind", "wound", "wound"},
    {"withdraw", "withdrew", "withdrawn"},
    {"write", "wrote", "written"},
};

// Forms that do not follow any pattern.
constexpr std::string_view kExtraForms[] = {
    "be",    "am",    "is",    "are",   "was",     "were", "been", "being",
    "do",    "does",  "did",   "done",  "doing",   "has",  "goes", "got",
    "lying", "dying", "tying", "shown", "showing", "paid", "laid", "said",
};

// Multi-syllable bases that double their final consonant.
constexpr std::string_view kDoublingBases[] = {
    "admit",  "commit", "control",  "occur", "permit", "prefer", "refer",
    "regret", "submit", "transfer", "upset", "forget", "forbid", "begin",
};

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

int VowelGroups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    bool v = IsVowel(c) || (c == 'y' && in_group);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

bool DoublesFinalConsonant(std::string_view w) {
  for (std::string_view d : kDoublingBases) {
    if (d == w) return true;
  }
  if (w.size() < 3 || VowelGroups(w) != 1) return false;
  char c3 = w[w.size() - 1], c2 = w[w.size() - 2], c1 = w[w.size() - 3];
  return !IsVowel(c3) && c3 != 'w' && c3 != 'x' && c3 != 'y' && IsVowel(c2) &&
         !IsVowel(c1);
}

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

std::string ThirdPerson(std::string_view w) {
  std::string b(w);
  if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
      EndsWith(w, "ch") || EndsWith(w, "sh") || EndsWith(w, "o")) {
    return b + "es";
  }
  if (w.size() > 1 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return b.substr(0, b.size() - 1) + "ies";
  }
  return b + "s";
}

std::string Past(std::string_view w) {
  std::string b(w);
  if (w.back() == 'e') return b + "d";
  if (w.size() > 1 && w.back() == 'y' && !IsVowel(w[w.size() - 2])) {
    return b.substr(0, b.size() - 1) + "ied";
  }
  if (DoublesFinalConsonant(w)) return b + w.back() + "ed";
  return b + "ed";
}

std::string Progressive(std::string_view w) {
  std::string b(w);
  if (EndsWith(w, "ie")) return b.substr(0, b.size() - 2) + "ying";
  if (w.back() == 'e' && !EndsWith(w, "ee") && !EndsWith(w, "ye") &&
      !EndsWith(w, "oe") && w.size() > 2) {
    return b.substr(0, b.size() - 1) + "ing";
  }
  if (DoublesFinalConsonant(w)) return b + w.back() + "ing";
  return b + "ing";
}

}  // namespace

std::unordered_set<std::string> RegularInflections(std::string_view base) {
  if (base.empty()) return {};
  return {std::string(base), ThirdPerson(base), Past(base), Progressive(base)};
}

const VerbLexicon &DefaultVerbLexicon() {
  static const auto *lexicon = [] {
    auto *out = new VerbLexicon;
    for (std::string_view v : kRegularVerbs) {
      auto forms = RegularInflections(v);
      out->insert(forms.begin(), forms.end());
    }
    for (const IrregularVerb &v : kIrregularVerbs) {
      out->emplace(v.base);
      out->emplace(ThirdPerson(v.base));
      out->emplace(Progressive(v.base));
      out->emplace(v.past);
      out->emplace(v.participle);
    }
    for (std::string_view w : kExtraForms) out->emplace(w);
    return out;
  }();
  return *lexicon;
}

VerbLexicon LoadVerbLexicon(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  VerbLexicon out;
  std::string line;
  while (std::getline(in, line)) {
    for (const std::string &w : SplitWords(line)) {
      if (w.front() != '#') out.insert(AsciiLower(w));
      break;
    }
  }
  return out;
}

}  // namespace essentia
