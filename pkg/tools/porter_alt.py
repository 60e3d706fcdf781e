"""Alternative Porter stemmer written independently for cross-validation.

Used only by tools/gen_porter_pairs.py to cross-check src/inflo/_porter.py
and emit the frozen reference-pair fixture. Deliberately structured
differently from the package implementation: word-form analysis is done on
a consonant/vowel mask string instead of index recursion, and rules are
data-driven (suffix, replacement, condition) triples evaluated in order.
"""

import re


def cv_mask(word: str) -> str:
    """Return a 'c'/'v' mask; y is a vowel iff the previous letter is a consonant."""
    mask = []
    for i, ch in enumerate(word):
        if ch in "aeiou":
            mask.append("v")
        elif ch == "y":
            mask.append("v" if (i > 0 and mask[i - 1] == "c") else "c")
        else:
            mask.append("c")
    return "".join(mask)


def measure(stem: str) -> int:
    return len(re.findall("v+c", cv_mask(stem)))


def contains_vowel(stem: str) -> bool:
    return "v" in cv_mask(stem)


def ends_cvc_not_wxy(stem: str) -> bool:
    return cv_mask(stem).endswith("cvc") and stem[-1] not in "wxy"


def ends_double_cons(stem: str) -> bool:
    return len(stem) >= 2 and stem[-1] == stem[-2] and cv_mask(stem)[-1] == "c"


def apply_rules(word, rules):
    """First suffix match decides; replacement applied only if cond passes."""
    for suffix, repl, cond in rules:
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if cond is None or cond(stem):
                return stem + repl
            return word
    return word


def m_gt(n):
    return lambda stem: measure(stem) > n


def step1a(w):
    return apply_rules(w, [
        ("sses", "ss", None),
        ("ies", "i", None),
        ("ss", "ss", None),
        ("s", "", None),
    ])


def step1b(w):
    if w.endswith("eed"):
        return w[:-3] + "ee" if measure(w[:-3]) > 0 else w
    for suffix in ("ed", "ing"):
        if w.endswith(suffix) and contains_vowel(w[: -len(suffix)]):
            s = w[: -len(suffix)]
            if s.endswith("at") or s.endswith("bl") or s.endswith("iz"):
                return s + "e"
            if ends_double_cons(s) and s[-1] not in "lsz":
                return s[:-1]
            if measure(s) == 1 and ends_cvc_not_wxy(s):
                return s + "e"
            return s
    return w


def step1c(w):
    if w.endswith("y") and contains_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


STEP2_RULES = [
    ("ational", "ate", m_gt(0)), ("tional", "tion", m_gt(0)),
    ("enci", "ence", m_gt(0)), ("anci", "ance", m_gt(0)),
    ("izer", "ize", m_gt(0)), ("bli", "ble", m_gt(0)),
    ("alli", "al", m_gt(0)), ("entli", "ent", m_gt(0)),
    ("eli", "e", m_gt(0)), ("ousli", "ous", m_gt(0)),
    ("ization", "ize", m_gt(0)), ("ation", "ate", m_gt(0)),
    ("ator", "ate", m_gt(0)), ("alism", "al", m_gt(0)),
    ("iveness", "ive", m_gt(0)), ("fulness", "ful", m_gt(0)),
    ("ousness", "ous", m_gt(0)), ("aliti", "al", m_gt(0)),
    ("iviti", "ive", m_gt(0)), ("biliti", "ble", m_gt(0)),
    ("logi", "log", m_gt(0)),
]

STEP3_RULES = [
    ("icate", "ic", m_gt(0)), ("ative", "", m_gt(0)), ("alize", "al", m_gt(0)),
    ("iciti", "ic", m_gt(0)), ("ical", "ic", m_gt(0)), ("ful", "", m_gt(0)),
    ("ness", "", m_gt(0)),
]

STEP4_RULES = [
    ("ement", "", m_gt(1)), ("ance", "", m_gt(1)), ("ence", "", m_gt(1)),
    ("able", "", m_gt(1)), ("ible", "", m_gt(1)), ("ment", "", m_gt(1)),
    ("ant", "", m_gt(1)), ("ent", "", m_gt(1)),
    ("ion", "", lambda s: measure(s) > 1 and s[-1:] in ("s", "t")),
    ("ism", "", m_gt(1)), ("ate", "", m_gt(1)), ("iti", "", m_gt(1)),
    ("ous", "", m_gt(1)), ("ive", "", m_gt(1)), ("ize", "", m_gt(1)),
    ("al", "", m_gt(1)), ("er", "", m_gt(1)), ("ic", "", m_gt(1)),
    ("ou", "", m_gt(1)),
]


def step5a(w):
    if w.endswith("e"):
        s = w[:-1]
        m = measure(s)
        if m > 1 or (m == 1 and not ends_cvc_not_wxy(s)):
            return s
    return w


def step5b(w):
    if w.endswith("ll") and measure(w) > 1:
        return w[:-1]
    return w


def stem_alt(word: str) -> str:
    if len(word) <= 2 or not word.isalpha():
        return word
    w = step1a(word)
    w = step1b(w)
    w = step1c(w)
    w = apply_rules(w, STEP2_RULES)
    w = apply_rules(w, STEP3_RULES)
    w = apply_rules(w, STEP4_RULES)
    w = step5a(w)
    w = step5b(w)
    return w
