#!/usr/bin/env python3
"""Knights and knaves corpus: generator and brute-force checker.

The checker reads each puzzle's sentences with its own small interpreter,
enumerates all knight/knave assignments and compares the unique solution and
the answers to the bundled questions against the `.json` sidecar.

    corpus.py verify corpus/puzzles
    corpus.py generate corpus/puzzles --seed 7
"""

import argparse
import itertools
import json
import random
import re
import sys
from pathlib import Path

NUMBERS = {"two": 2, "three": 3, "four": 4, "five": 5, "six": 6, "seven": 7, "eight": 8, "nine": 9}
ORDINALS = ["first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth"]
SPEECH = {"says", "claims", "tells", "states", "declares", "asserts"}
PRONOUNS = {"he", "she", "him", "her"}


class Unreadable(Exception):
    pass


def sentences(text):
    text = text.replace("``", " ").replace("''", " ").replace('"', " ")
    parts = re.split(r"(?<=[.?!])\s+", text.strip())
    return [p.strip() for p in parts if p.strip()]


def tokens(sentence):
    return re.findall(r"[A-Za-z]+|[,:]", sentence)


def persons_of(sents):
    for s in sents:
        m = re.search(r"(?:meet|are)\s+(\w+)\s+inhabitants\s*:\s*(.*?)\.?$", s)
        if m and m.group(1).lower() in NUMBERS:
            names = re.split(r"\s*,\s*(?:and\s+)?|\s+and\s+", m.group(2))
            return [n for n in names if n], False
        m = re.search(r"approached by (\w+) (?:people|inhabitants|persons)", s)
        if m and m.group(1).lower() in NUMBERS:
            return [chr(ord("A") + i) for i in range(NUMBERS[m.group(1).lower()])], True
    raise Unreadable("no introduction of the inhabitants")


def rewrite(toks, persons, anonymous):
    out = []
    i = 0
    while i < len(toks):
        w = toks[i].lower()
        if anonymous and w == "the" and i + 2 < len(toks) and toks[i + 2].lower() in ("one", "inhabitant", "person"):
            ordinal = toks[i + 1].lower()
            k = 1 if ordinal == "other" and len(persons) == 2 else (
                ORDINALS.index(ordinal) if ordinal in ORDINALS else -1)
            if 0 <= k < len(persons):
                out.append(persons[k])
                i += 3
                continue
        if w in ("we", "us") and len(persons) == 2:
            out += [persons[0], "and", persons[1]]
        else:
            out.append(toks[i])
        i += 1
    first = next((t for t in out if t in persons), None)
    return [first if t.lower() in PRONOUNS and first else t for t in out]


# A reading is a function from an assignment (name -> True for knight) to bool.

def simple(toks, persons):
    ws = [t.lower() for t in toks]
    n = len(ws)

    def name(i):
        return toks[i] if i < n and toks[i] in persons else None

    def role(word):
        return {"knight": True, "knights": True, "knave": False, "knaves": False}.get(word)

    # X is a knight / X is not a knave
    if n == 4 and name(0) and ws[1:3] == ["is", "a"] and role(ws[3]) is not None:
        x, r = toks[0], role(ws[3])
        return lambda a: a[x] == r
    if n == 5 and name(0) and ws[1:4] == ["is", "not", "a"] and role(ws[4]) is not None:
        x, r = toks[0], role(ws[4])
        return lambda a: a[x] != r
    if n == 2 and name(0) and ws[1] == "lies":
        x = toks[0]
        return lambda a: not a[x]
    # X and Y are (both) knights / both knights or both knaves / the same / different
    if n >= 5 and name(0) and ws[1] == "and" and name(2) and ws[3] == "are":
        x, y, rest = toks[0], toks[2], ws[4:]
        if rest in (["the", "same"],):
            return lambda a: a[x] == a[y]
        if rest == ["different"]:
            return lambda a: a[x] != a[y]
        if rest == ["both", "knights", "or", "both", "knaves"]:
            return lambda a: a[x] == a[y]
        if len(rest) == 1 and role(rest[0]) is not None or len(rest) == 2 and rest[0] == "both" and role(rest[1]) is not None:
            r = role(rest[-1])
            return lambda a: a[x] == r and a[y] == r
    return None


def statement(toks, persons):
    ws = [t.lower() for t in toks]
    lead = ["at", "least", "one", "of", "the", "following", "is", "true", ":", "that"]
    if ws[:len(lead)] == lead:
        rest = toks[len(lead):]
        for i in range(len(rest) - 1):
            if [w.lower() for w in rest[i:i + 2]] == ["or", "that"]:
                left, right = statement(rest[:i], persons), statement(rest[i + 2:], persons)
                if left and right:
                    return lambda a: left(a) or right(a)
        return None
    s = simple(toks, persons)
    if s:
        return s
    # X would tell you that ... / X could say that ... / X knows that ...
    if len(toks) > 2 and toks[0] in persons:
        x = toks[0]
        for form in (["would", "tell", "you", "that"], ["could", "say", "that"], ["would", "say", "that"],
                     ["could", "tell", "you", "that"]):
            if ws[1:1 + len(form)] == form:
                inner = statement(toks[1 + len(form):], persons)
                if inner:
                    return lambda a: inner(a) if a[x] else not inner(a)
        if ws[1:3] == ["knows", "that"]:
            return statement(toks[3:], persons)
    for connective in (["and", "that"], ["or"], ["and"]):
        k = len(connective)
        for i in range(1, len(toks) - k):
            if ws[i:i + k] == connective:
                left, right = statement(toks[:i], persons), statement(toks[i + k:], persons)
                if left and right:
                    if connective == ["or"]:
                        return lambda a, l=left, r=right: l(a) or r(a)
                    return lambda a, l=left, r=right: l(a) and r(a)
    return None


def utterance(toks, persons):
    """(speaker, reading) for `X says that ...`, `X tells you that ...`, `X says: ...`."""
    ws = [t.lower() for t in toks]
    if len(toks) < 3 or toks[0] not in persons or ws[1] not in SPEECH:
        return None
    i = 2
    if ws[i] == "you":
        i += 1
    if ws[i] not in ("that", ":"):
        return None
    reading = statement(toks[i + 1:], persons)
    if reading is None:
        raise Unreadable("cannot read: " + " ".join(toks))
    return toks[0], reading


def read_puzzle(text):
    sents = sentences(text)
    persons, anonymous = persons_of(sents)
    said = []
    for s in sents:
        if s.endswith("?"):
            continue
        u = utterance(rewrite(tokens(s), persons, anonymous), persons)
        if u:
            said.append(u)
    return persons, anonymous, said


def solutions(persons, said):
    out = []
    for bits in itertools.product([True, False], repeat=len(persons)):
        a = dict(zip(persons, bits))
        if all(a[x] == r(a) for x, r in said):
            out.append(a)
    return out


def question_reading(question, persons, anonymous):
    toks = rewrite(tokens(question.rstrip("?")), persons, anonymous)
    ws = [t.lower() for t in toks]
    if ws[0] == "is" and "and" in ws and len(toks) > 4:
        i = ws.index("and")
        left = simple(toks[1:2] + ["is"] + toks[2:i], persons)
        right = simple(toks[i + 1:i + 2] + ["is"] + toks[i + 2:], persons)
        if left and right:
            return lambda a: left(a) and right(a)
    if ws[0] == "is":
        return simple(toks[1:2] + ["is"] + toks[2:], persons)
    if ws[0] == "are":
        return simple(toks[1:4] + ["are"] + toks[4:], persons)
    if ws[0] == "does" and ws[2:] == ["lie"]:
        x = toks[1]
        return lambda a: not a[x]
    if ws[0] == "does" and ws[2:] == ["tell", "the", "truth"]:
        x = toks[1]
        return lambda a: a[x]
    return None


def expected(text, questions):
    persons, anonymous, said = read_puzzle(text)
    sols = solutions(persons, said)
    if len(sols) != 1:
        raise Unreadable(f"{len(sols)} solutions")
    a = sols[0]
    answers = []
    for q in questions:
        r = question_reading(q, persons, anonymous)
        if r is None:
            raise Unreadable("cannot read question: " + q)
        answers.append("Yes" if r(a) else "No")
    return persons, {p: "knight" if a[p] else "knave" for p in persons}, answers


def verify(directory):
    failures = 0
    count = 0
    for path in sorted(Path(directory).glob("*.txt")):
        side = path.with_suffix(".json")
        if not side.exists():
            print(f"FAIL {path.name}: missing sidecar")
            failures += 1
            continue
        meta = json.loads(side.read_text())
        if meta.get("domain", "knights-knaves") != "knights-knaves":
            continue
        count += 1
        questions = [q["question"] for q in meta.get("questions", [])]
        try:
            persons, assignment, answers = expected(path.read_text(), questions)
        except Unreadable as e:
            print(f"FAIL {path.name}: {e}")
            failures += 1
            continue
        problems = []
        if meta.get("persons") != persons:
            problems.append(f"persons {persons}")
        if meta.get("assignment") != assignment:
            problems.append(f"assignment {assignment}")
        for q, a in zip(meta.get("questions", []), answers):
            if q["answer"] != a:
                problems.append(f"{q['question']} -> {a}")
        if problems:
            failures += 1
            print(f"FAIL {path.name}: " + "; ".join(problems))
        else:
            print(f"ok   {path.name}: {len(persons)} persons, {len(questions)} questions")
    print(f"{count - failures if count >= failures else 0}/{count} puzzles agree")
    return 1 if failures else 0


# ---- generation

MALE = {"Bob", "Carl", "Dave", "Homer", "Kevin", "Rex", "Ted", "Zed", "Abe", "Bart", "Ned", "Joe", "Sam", "Tom",
        "Mel", "Bozo"}
NAMES = ["Alice", "Bob", "Carl", "Betty", "Ted", "Dave", "Sally", "Rex", "Zoey", "Abe", "Lisa", "Ned", "Rose",
         "Peggy", "Zed", "Ida", "Sam", "Tom", "Carol", "Joe", "Bart", "Maggie", "Kevin", "Mel"]
ISLANDS = [
    "On the island where each inhabitant is either a knave or a knight, knights always tell the truth while knaves "
    "always lie.",
    "On the island of knights and knaves, knights always tell the truth, while knaves always lie.",
]
VERBS = [("says", "that"), ("claims", "that"), ("tells you", "that"), ("says", ":")]


def noun(knight, plural=False):
    return ("knights" if plural else "knight") if knight else ("knaves" if plural else "knave")


def clause(rng, speaker, persons, ref, depth=0):
    """A random simple clause as (text, reading); `ref` renders a person."""
    others = [p for p in persons if p != speaker]
    x = rng.choice(persons)
    y = rng.choice([p for p in persons if p != x])
    kind = rng.choice(["is", "is", "isnot", "lies", "both", "same", "different", "pair", "nested"] if depth == 0
                      else ["is", "is", "isnot", "lies", "same", "different"])
    r = rng.random() < 0.5
    if kind == "is":
        return f"{ref(x)} is a {noun(r)}", lambda a: a[x] == r
    if kind == "isnot":
        return f"{ref(x)} is not a {noun(r)}", lambda a: a[x] != r
    if kind == "lies":
        return f"{ref(x)} lies", lambda a: not a[x]
    if kind == "both":
        return f"{ref(x)} and {ref(y)} are both {noun(r, True)}", lambda a: a[x] == r and a[y] == r
    if kind == "same":
        return f"{ref(x)} and {ref(y)} are the same", lambda a: a[x] == a[y]
    if kind == "different":
        return f"{ref(x)} and {ref(y)} are different", lambda a: a[x] != a[y]
    if kind == "pair":
        return f"{ref(x)} and {ref(y)} are both knights or both knaves", lambda a: a[x] == a[y]
    z = rng.choice(others)
    text, inner = clause(rng, z, persons, ref, depth + 1)
    modal = rng.choice(["would tell you", "could say"])
    return f"{ref(z)} {modal} that {text}", lambda a: inner(a) if a[z] else not inner(a)


def statement_for(rng, speaker, persons, ref):
    form = rng.random()
    if form < 0.6:
        return clause(rng, speaker, persons, ref)
    # Two plain clauses, so the connective has one reading.
    t1, r1 = clause(rng, speaker, persons, ref, 1)
    t2, r2 = clause(rng, speaker, persons, ref, 1)
    while t2.split(" is")[0].split(" lies")[0] == t1.split(" is")[0].split(" lies")[0]:
        t2, r2 = clause(rng, speaker, persons, ref, 1)
    if form < 0.75:
        return f"{t1} or {t2}", lambda a: r1(a) or r2(a)
    if form < 0.9:
        return f"at least one of the following is true: that {t1} or that {t2}", lambda a: r1(a) or r2(a)
    return f"{t1} and {t2}", lambda a: r1(a) and r2(a)


def pronouns(text, speaker, anonymous):
    """Self references become he/she where a name is known to be gendered."""
    if anonymous:
        return text
    pronoun = "he" if speaker in MALE else "she"
    return re.sub(rf"^{speaker}\b(?= and| is| lies)", pronoun, text)


def generate_one(rng, n, anonymous):
    persons = [chr(ord("A") + i) for i in range(n)] if anonymous else rng.sample(NAMES, n)

    def ref(p):
        return f"the {ORDINALS[persons.index(p)]} one" if anonymous else p

    truth = {p: rng.random() < 0.5 for p in persons}
    said = []
    lines = []
    speakers_used = {}
    for _ in range(200):
        if len(solutions(persons, said)) == 1 and len(said) >= n - 1:
            break
        speaker = rng.choice(persons)
        if speakers_used.get(speaker, 0) >= 2:
            continue
        text, reading = statement_for(rng, speaker, persons, ref)
        if reading(truth) != truth[speaker]:
            continue
        before = len(solutions(persons, said))
        if len(solutions(persons, said + [(speaker, reading)])) >= before:
            continue
        said.append((speaker, reading))
        speakers_used[speaker] = speakers_used.get(speaker, 0) + 1
        verb, link = rng.choice(VERBS)
        text = pronouns(text, speaker, anonymous)
        if anonymous:
            lines.append(f"The {ORDINALS[persons.index(speaker)]} one says: {text}.")
        else:
            lines.append(f"{speaker} {verb} {link} {text}." if link == "that" else f"{speaker} {verb}: {text}.")
    sols = solutions(persons, said)
    if len(sols) != 1:
        return None
    number = [k for k, v in NUMBERS.items() if v == n][0]
    if anonymous:
        intro = f"You are approached by {number} people."
    else:
        intro = f"You meet {number} inhabitants: " + ", ".join(persons[:-1]) + f" and {persons[-1]}."
    return persons, truth, [rng.choice(ISLANDS), intro] + lines


def questions_for(rng, persons, anonymous):
    def ref(p):
        return f"the {ORDINALS[persons.index(p)]} inhabitant" if anonymous else p

    x, y = rng.sample(persons, 2)
    qs = [f"Is {ref(x)} a knight?", f"Is {ref(y)} a knave?", f"Are {ref(x)} and {ref(y)} the same?"]
    if not anonymous:
        qs += [f"Does {y} lie?", f"Are {x} and {y} both knights?"]
    return qs


def generate(directory, seed, sizes):
    rng = random.Random(seed)
    out = Path(directory)
    made = 0
    for index, (n, anonymous) in enumerate(sizes):
        for _ in range(1000):
            g = generate_one(rng, n, anonymous)
            if g:
                break
        else:
            print(f"gave up on {n} persons", file=sys.stderr)
            continue
        persons, truth, lines = g
        text = "\n".join(lines) + "\n"
        qs = questions_for(rng, persons, anonymous)
        ps, assignment, answers = expected(text, qs)
        stem = f"g{index + 1:02d}-{n}{'-anon' if anonymous else ''}"
        (out / f"{stem}.txt").write_text(text)
        meta = {"domain": "knights-knaves", "persons": ps, "assignment": assignment,
                "questions": [{"question": q, "answer": a} for q, a in zip(qs, answers)]}
        (out / f"{stem}.json").write_text(json.dumps(meta, indent=2) + "\n")
        made += 1
    print(f"wrote {made} puzzles")


SIZES = [(2, False), (2, True), (3, False), (3, True), (3, False), (4, False), (4, False), (4, True), (5, False),
         (5, False), (6, False), (6, False), (7, False), (7, False), (8, False), (8, False), (9, False), (9, False)]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify")
    v.add_argument("directory")
    g = sub.add_parser("generate")
    g.add_argument("directory")
    g.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    if args.command == "verify":
        return verify(args.directory)
    generate(args.directory, args.seed, SIZES)
    return 0


if __name__ == "__main__":
    sys.exit(main())
