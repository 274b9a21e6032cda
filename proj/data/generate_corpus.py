#!/usr/bin/env python3
"""Regenerates the bundled test corpus under data/corpus/.

The corpus is synthetic English-like prose produced by a small stochastic
grammar: function words appear in their usual grammatical slots, content
words follow a Zipf-like frequency profile, and each "book" has its own cast
of names and favourite nouns so that vocabulary grows as books are added.
Output is fully determined by SEED; the text is released into the public
domain.

    python3 data/generate_corpus.py
"""

import pathlib
import random

SEED = 20240611
BOOKS = 10
WORDS_PER_BOOK = 5000

NOUNS = """
time year day night morning evening week month house home door window room
wall floor roof garden field road street river sea shore island hill mountain
valley forest tree leaf flower stone rock sand water fire smoke wind rain snow
storm sky sun moon star light shadow voice sound word letter book page story
song name face eye hand arm head heart mind thought dream memory hope fear
anger joy grief silence truth lie secret question answer reason idea plan
chance fortune danger trouble war peace battle army soldier captain king queen
prince lord lady master servant friend enemy stranger child boy girl man woman
father mother brother sister son daughter husband wife uncle aunt family
people crowd town city village country land world horse dog cat bird wolf
sheep cow fish ship boat sail anchor harbour bridge tower castle church bell
clock table chair bed cup glass bottle bread wine meat apple candle lamp coat
hat boot ring coin money gold silver iron sword knife gun rope chain key box
bag basket letter paper pen ink map road path journey trip visit meeting dinner
supper breakfast feast market shop inn tavern kitchen cellar attic stair hall
gate fence wall corner edge side top bottom middle end beginning history
morning summer winter spring autumn season hour minute moment age youth
doctor judge priest teacher farmer sailor merchant thief guard hunter miller
painter poet writer reader traveller neighbour guest host crew passenger
question matter business work labour task duty promise debt price cost value
news message order law rule custom habit manner fashion style mood temper
courage patience kindness pride shame honour glory power strength weakness
health illness fever wound blood bone skin hair tooth tongue lip shoulder knee
foot finger cheek forehead brow smile laugh tear cry whisper shout murmur
""".split()

VERBS = [
    # base, past, ing, third
    ("walk", "walked", "walking", "walks"), ("run", "ran", "running", "runs"),
    ("see", "saw", "seeing", "sees"), ("look", "looked", "looking", "looks"),
    ("say", "said", "saying", "says"), ("tell", "told", "telling", "tells"),
    ("take", "took", "taking", "takes"), ("give", "gave", "giving", "gives"),
    ("find", "found", "finding", "finds"), ("leave", "left", "leaving", "leaves"),
    ("bring", "brought", "bringing", "brings"), ("hold", "held", "holding", "holds"),
    ("keep", "kept", "keeping", "keeps"), ("turn", "turned", "turning", "turns"),
    ("open", "opened", "opening", "opens"), ("close", "closed", "closing", "closes"),
    ("carry", "carried", "carrying", "carries"), ("follow", "followed", "following", "follows"),
    ("watch", "watched", "watching", "watches"), ("hear", "heard", "hearing", "hears"),
    ("know", "knew", "knowing", "knows"), ("think", "thought", "thinking", "thinks"),
    ("feel", "felt", "feeling", "feels"), ("want", "wanted", "wanting", "wants"),
    ("call", "called", "calling", "calls"), ("ask", "asked", "asking", "asks"),
    ("answer", "answered", "answering", "answers"), ("write", "wrote", "writing", "writes"),
    ("read", "read", "reading", "reads"), ("sing", "sang", "singing", "sings"),
    ("love", "loved", "loving", "loves"), ("hate", "hated", "hating", "hates"),
    ("meet", "met", "meeting", "meets"), ("lose", "lost", "losing", "loses"),
    ("win", "won", "winning", "wins"), ("build", "built", "building", "builds"),
    ("break", "broke", "breaking", "breaks"), ("burn", "burned", "burning", "burns"),
    ("climb", "climbed", "climbing", "climbs"), ("cross", "crossed", "crossing", "crosses"),
    ("drink", "drank", "drinking", "drinks"), ("eat", "ate", "eating", "eats"),
    ("fight", "fought", "fighting", "fights"), ("fill", "filled", "filling", "fills"),
    ("gather", "gathered", "gathering", "gathers"), ("hide", "hid", "hiding", "hides"),
    ("lead", "led", "leading", "leads"), ("lift", "lifted", "lifting", "lifts"),
    ("mend", "mended", "mending", "mends"), ("pass", "passed", "passing", "passes"),
    ("pull", "pulled", "pulling", "pulls"), ("push", "pushed", "pushing", "pushes"),
    ("reach", "reached", "reaching", "reaches"), ("remember", "remembered", "remembering", "remembers"),
    ("ride", "rode", "riding", "rides"), ("seek", "sought", "seeking", "seeks"),
    ("sell", "sold", "selling", "sells"), ("send", "sent", "sending", "sends"),
    ("show", "showed", "showing", "shows"), ("strike", "struck", "striking", "strikes"),
    ("teach", "taught", "teaching", "teaches"), ("throw", "threw", "throwing", "throws"),
    ("touch", "touched", "touching", "touches"), ("wait", "waited", "waiting", "waits"),
    ("wake", "woke", "waking", "wakes"), ("wash", "washed", "washing", "washes"),
    ("wear", "wore", "wearing", "wears"), ("wish", "wished", "wishing", "wishes"),
    ("wonder", "wondered", "wondering", "wonders"), ("promise", "promised", "promising", "promises"),
    ("praise", "praised", "praising", "praises"), ("greet", "greeted", "greeting", "greets"),
    ("visit", "visited", "visiting", "visits"), ("guard", "guarded", "guarding", "guards"),
    ("paint", "painted", "painting", "paints"), ("plant", "planted", "planting", "plants"),
    ("save", "saved", "saving", "saves"), ("steal", "stole", "stealing", "steals"),
    ("trust", "trusted", "trusting", "trusts"), ("doubt", "doubted", "doubting", "doubts"),
    ("fear", "feared", "fearing", "fears"), ("forget", "forgot", "forgetting", "forgets"),
    ("forgive", "forgave", "forgiving", "forgives"), ("cover", "covered", "covering", "covers"),
    ("count", "counted", "counting", "counts"), ("chase", "chased", "chasing", "chases"),
    ("catch", "caught", "catching", "catches"), ("bury", "buried", "burying", "buries"),
    ("bless", "blessed", "blessing", "blesses"), ("betray", "betrayed", "betraying", "betrays"),
    ("answer", "answered", "answering", "answers"), ("buy", "bought", "buying", "buys"),
]

INTRANSITIVE = [
    ("smile", "smiled"), ("laugh", "laughed"), ("sleep", "slept"), ("wait", "waited"),
    ("sigh", "sighed"), ("listen", "listened"), ("return", "returned"), ("arrive", "arrived"),
    ("vanish", "vanished"), ("tremble", "trembled"), ("rest", "rested"), ("weep", "wept"),
    ("fall", "fell"), ("rise", "rose"), ("stand", "stood"), ("sit", "sat"), ("go", "went"),
    ("come", "came"), ("die", "died"), ("pray", "prayed"), ("hesitate", "hesitated"),
    ("nod", "nodded"), ("shiver", "shivered"), ("linger", "lingered"), ("wander", "wandered"),
]

ADJECTIVES = """
old young little great small large long short high low dark bright black white
red green blue grey golden silver cold warm hot wet dry quiet loud soft hard
heavy light strong weak rich poor good bad kind cruel gentle wild calm proud
humble brave afraid happy sad angry tired sick wise foolish clever simple
strange familiar new ancient empty full deep narrow broad sharp dull sweet
bitter clean dirty fair ugly beautiful lonely busy idle honest false true
silent distant near hidden open broken whole secret sacred common rare pale
""".split()

ADVERBS = """
slowly quickly quietly softly suddenly gently carefully almost already again
always never often sometimes soon still then there here away back together
alone perhaps certainly truly nearly hardly rather quite once twice later
early late far outside inside forward upward
""".split()

DETERMINERS = ["the"] * 12 + ["a"] * 5 + ["his", "her", "their", "this", "that", "my",
                                          "our", "its", "every", "some", "no", "each"]
PLURAL_DETERMINERS = ["the"] * 6 + ["these", "those", "some", "many", "few", "all",
                                    "his", "her", "their", "our"]
PREPOSITIONS = ["of"] * 6 + ["in"] * 5 + ["to"] * 3 + [
    "on", "at", "for", "with", "with", "from", "by", "over", "under", "through",
    "after", "before", "into", "upon", "across", "near", "without", "against",
    "between", "behind", "beyond", "toward", "along", "among"]
SUBJECT_PRONOUNS = ["he"] * 4 + ["she"] * 3 + ["they"] * 2 + ["i"] * 2 + ["we", "you", "it"]
OBJECT_PRONOUNS = ["him", "her", "them", "me", "us", "you", "it"]
CONJUNCTIONS = ["and"] * 6 + ["but"] * 3 + ["while", "because", "although", "when",
                                           "though", "so", "yet", "or", "until", "since"]
AUXILIARIES = ["was", "was", "were", "had been", "would be", "could not be", "is", "might be"]
PROGRESSIVE = ["was", "was", "were", "had been", "would be", "is", "might be"]
MODALS = ["would", "could", "should", "must", "might", "will", "did not", "could not",
          "would not", "can", "may"]
QUESTION_WORDS = ["where", "why", "how", "when", "what", "who"]

SYLLABLES = """
ba be bi bo da de di do ka ke ki ko la le li lo ma me mi mo na ne ni no
ra re ri ro sa se si so ta te ti to va ve vi vo za ze zi zo bra dre gri
kro pla sle tri vro an el in on ar er or us is ul en
""".split()


def zipf_weights(n, exponent=1.05):
    return [1.0 / (rank + 1) ** exponent for rank in range(n)]


class Lexicon:
    def __init__(self, rng, words, exponent=1.05):
        self.words = list(words)
        rng.shuffle(self.words)
        self.weights = zipf_weights(len(self.words), exponent)
        self.rng = rng

    def pick(self):
        return self.rng.choices(self.words, weights=self.weights, k=1)[0]


def coin(rng, syllables):
    return "".join(rng.choice(SYLLABLES) for _ in range(syllables))


def plural(noun):
    if noun.endswith(("s", "sh", "ch", "x")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith("f"):
        return noun[:-1] + "ves"
    return noun + "s"


class Book:
    def __init__(self, rng, index):
        self.rng = rng
        coined_nouns = {coin(rng, rng.choice((2, 3))) for _ in range(900)}
        coined_adjectives = {coin(rng, 2) + rng.choice(("ish", "ous", "ful", "en"))
                             for _ in range(250)}
        coined_verbs = {coin(rng, 2) for _ in range(200)}
        self.names = Lexicon(rng, {coin(rng, rng.choice((2, 3))).capitalize()
                                   for _ in range(120)}, 1.3)
        self.nouns = Lexicon(rng, list(dict.fromkeys(NOUNS)) + sorted(coined_nouns), 1.0)
        self.adjectives = Lexicon(rng, ADJECTIVES + sorted(coined_adjectives), 1.0)
        self.adverbs = Lexicon(rng, ADVERBS, 1.0)
        verbs = list(VERBS) + [(v, v + "ed", v + "ing", v + "s") for v in sorted(coined_verbs)]
        self.verbs = Lexicon(rng, verbs, 1.0)
        self.intransitive = Lexicon(rng, INTRANSITIVE, 1.0)
        self.index = index

    # Grammar -----------------------------------------------------------------

    def noun_phrase(self, depth=0, subject=False):
        r = self.rng.random()
        if r < 0.22:
            return [self.rng.choice(SUBJECT_PRONOUNS if subject else OBJECT_PRONOUNS)]
        if r < 0.34:
            return [self.names.pick()]
        words = []
        if self.rng.random() < 0.25:
            words.append(self.rng.choice(PLURAL_DETERMINERS))
            noun = plural(self.nouns.pick())
        else:
            words.append(self.rng.choice(DETERMINERS))
            noun = self.nouns.pick()
        if self.rng.random() < 0.45:
            words.append(self.adjectives.pick())
            if self.rng.random() < 0.12:
                words += ["and", self.adjectives.pick()]
        words.append(noun)
        if depth < 2 and self.rng.random() < 0.3:
            words += self.prep_phrase(depth + 1)
        if depth == 0 and self.rng.random() < 0.08:
            words += ["who" if self.rng.random() < 0.5 else "which"] + self.verb_phrase(depth + 1)
        if words[0] == "a" and words[1][0] in "aeiou":
            words[0] = "an"
        return words

    def prep_phrase(self, depth=0):
        return [self.rng.choice(PREPOSITIONS)] + self.noun_phrase(depth)

    def verb_phrase(self, depth=0):
        r = self.rng.random()
        words = []
        if self.rng.random() < 0.15:
            words.append(self.adverbs.pick())
        if r < 0.45:
            words += [self.verbs.pick()[1]] + self.noun_phrase(depth)
        elif r < 0.6:
            words += self.rng.choice(PROGRESSIVE).split() + [self.verbs.pick()[2]]
            words += self.noun_phrase(depth)
        elif r < 0.75:
            words += self.rng.choice(MODALS).split() + [self.verbs.pick()[0]] + self.noun_phrase(depth)
        elif r < 0.9:
            words.append(self.intransitive.pick()[1])
        else:
            words += self.rng.choice(AUXILIARIES).split() + [self.adjectives.pick()]
        if depth < 2 and self.rng.random() < 0.4:
            words += self.prep_phrase(depth + 1)
        if self.rng.random() < 0.1:
            words.append(self.adverbs.pick())
        return words

    def clause(self):
        return self.noun_phrase(subject=True) + self.verb_phrase()

    def sentence(self):
        r = self.rng.random()
        if r < 0.08:
            words = [self.rng.choice(QUESTION_WORDS), self.rng.choice(["did", "had", "was", "would"])]
            words += self.noun_phrase(subject=True) + [self.verbs.pick()[0]]
            return words, "?"
        words = self.clause()
        while len(words) < 25 and self.rng.random() < 0.35:
            words += [self.rng.choice(CONJUNCTIONS)] + self.clause()
        if self.rng.random() < 0.1:
            words = [self.adverbs.pick()] + words
        return words, "!" if self.rng.random() < 0.05 else "."

    def render(self, words_wanted):
        paragraphs, paragraph, produced = [], [], 0
        while produced < words_wanted:
            words, end = self.sentence()
            produced += len(words)
            words = ["I" if w == "i" else w for w in words]
            text = " ".join(words)
            text = text[0].upper() + text[1:]
            if self.rng.random() < 0.1 and len(words) > 4:
                cut = self.rng.randrange(2, len(words) - 1)
                head = " ".join(words[:cut])
                text = head[0].upper() + head[1:] + ", " + " ".join(words[cut:])
            sentence = text + end
            if self.rng.random() < 0.06:
                sentence = '"' + sentence + '" ' + self.rng.choice(["he said.", "she said.", "they said."])
            paragraph.append(sentence)
            if len(paragraph) >= self.rng.randint(3, 8):
                paragraphs.append(" ".join(paragraph))
                paragraph = []
        if paragraph:
            paragraphs.append(" ".join(paragraph))
        return "\n\n".join(paragraphs) + "\n"


def main():
    root = pathlib.Path(__file__).resolve().parent
    out = root / "corpus"
    out.mkdir(exist_ok=True)
    rng = random.Random(SEED)
    for i in range(1, BOOKS + 1):
        book = Book(random.Random(rng.getrandbits(64)), i)
        (out / f"book{i:02d}.txt").write_text(book.render(WORDS_PER_BOOK), encoding="utf-8")


if __name__ == "__main__":
    main()
