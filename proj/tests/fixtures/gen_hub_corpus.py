#!/usr/bin/env python3
"""Writes hub_mentions.csv and hub_sources.csv: a 500-mention corpus in which
History journals are co-cited with every other humanities specialty."""

import csv
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent
rng = random.Random(20190611)


def issn(serial):
    body = f"{serial:07d}"
    total = sum(int(c) * (8 - i) for i, c in enumerate(body))
    check = (11 - total % 11) % 11
    return f"{body[:4]}-{body[4:]}{'X' if check == 10 else check}"


OTHERS = {
    "1203": "Language and Linguistics",
    "1204": "Archeology (arts and humanities)",
    "1205": "Classics",
    "1206": "Conservation",
    "1207": "History and Philosophy of Science",
    "1208": "Literature and Literary Theory",
    "1209": "Museology",
    "1210": "Music",
    "1211": "Philosophy",
    "1212": "Religious Studies",
    "1213": "Visual Arts and Performing Arts",
}

journals = []
serial = 1000100
for k in range(4):
    journals.append({"title": f"Historical Review {k + 1}", "codes": ["1202"], "names": ["History"]})
for code, name in OTHERS.items():
    for k in range(2):
        journals.append({"title": f"{name} Quarterly {k + 1}", "codes": [code], "names": [name]})
for j in journals:
    j["issn"] = issn(serial)
    serial += 37
    j["pct"] = rng.choice([2, 5, 9, 15, 30, 60])
    j["output"] = rng.randint(40, 900)
    j["cites"] = j["output"] * rng.randint(2, 9)

history = [j for j in journals if j["codes"] == ["1202"]]
others = [j for j in journals if j["codes"] != ["1202"]]

with open(HERE / "hub_sources.csv", "w", newline="") as f:
    w = csv.writer(f, lineterminator="\n")
    w.writerow(["title", "print_issn", "e_issn", "asjc_codes", "specialty_names", "open_access",
                "top_percentile", "scholarly_output", "citation_count"])
    for j in journals:
        w.writerow([j["title"], j["issn"], "", ";".join(j["codes"]), ";".join(j["names"]),
                    "true" if j["pct"] > 30 else "false", j["pct"], j["output"], j["cites"]])


def article(journal):
    n = rng.randint(1, 6)
    return f"10.9999/{journal['issn']}.{n}", f"Study {n} in {journal['title']}"


rows = []
languages = ["en"] * 6 + ["sv", "fi", "de", "fr"]
entry = 0
while len(rows) < 500:
    entry += 1
    page = f"Topic {entry:03d}"
    lang = rng.choice(languages)
    picks = [rng.choice(history)]
    picks += rng.sample(others, rng.choice([1, 2, 2, 3]))
    if rng.random() < 0.3:
        picks.append(rng.choice(history))
    for j in picks:
        if len(rows) == 500:
            break
        doi, title = article(j)
        year = rng.randint(2008, 2017)
        date = f"{year}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
        rows.append([f"h{len(rows) + 1:03d}", doi, title, j["title"], j["issn"], page, lang, date,
                     year - rng.randint(0, 5)])

with open(HERE / "hub_mentions.csv", "w", newline="") as f:
    w = csv.writer(f, lineterminator="\n")
    w.writerow(["mention_id", "doi", "article_title", "journal_title", "issns", "wiki_page_title",
                "wiki_language", "mention_date", "article_year"])
    w.writerows(rows)
