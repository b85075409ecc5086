"""Freezes (word, stem) pairs from NLTK's Porter stemmer in reference mode.

MARTIN_EXTENSIONS reproduces Martin Porter's own C implementation, which is
the behaviour topicforge pins. Usage:

    python3 gen_porter_vocabulary.py WORDLIST... > ../data/porter_vocabulary.txt
"""
import re
import sys

from nltk.stem.porter import PorterStemmer

CLASSIC = """caresses ponies ties caress cats feed agreed plastered bled motoring
sing conflated troubled sized hopping tanned falling hissing fizzed failing
filing happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness
formaliti sensitiviti sensibiliti triplicate formative formalize electriciti
electrical hopeful goodness revival allowance inference airliner gyroscopic
adjustable defensible irritant replacement adjustment dependent adoption
homologou communism activate angulariti homologous effective bowdlerize
probate rate cease controll roll generalizations oscillators details struck
aircraft bird birds flying landing approach runway engines detected strike
evidence birdstrike pilot damage minor helicopter sustained inspection
retrieved engineering cruise revealed cockpit descent observed routine radio
calls crew clearance separation gear failed encountered takeoff kite
archaeology analogies""".split()

def main():
    words = set(CLASSIC)
    for path in sys.argv[1:]:
        with open(path, encoding="utf-8", errors="ignore") as f:
            for token in re.findall(r"[a-z]+", f.read().lower()):
                if len(token) >= 3:
                    words.add(token)
    stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    for word in sorted(words):
        print(word, stemmer.stem(word))

if __name__ == "__main__":
    main()
