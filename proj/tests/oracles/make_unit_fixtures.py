"""Writes small hand-built fixtures used by the unit tests.

- license_xml/: five article files with known license elements
- archive/: a tar.gz bundle with two articles, one text file and one binary
- tokens_golden.json: 20 strings with the reference word tokenization
- registry/: OA-service style XML answers for 10 accessions
- openie/: annotation-server JSON answers for 20 sentences plus the
  triples each one should yield
"""
import io
import json
import os
import re
import sys
import tarfile

HEAD = ('<?xml version="1.0" encoding="UTF-8"?>\n<article xmlns:xlink="http://www.w3.org/1999/xlink" '
        'xmlns:ali="http://www.niso.org/schemas/ali/1.0/"><front><article-meta>'
        '<article-id pub-id-type="pmc">{id}</article-id><title-group><article-title>{title}'
        '</article-title></title-group>{perm}<abstract><p>{abstract}</p></abstract></article-meta>'
        '</front><body><sec><p>{body}</p></sec></body></article>\n')

LICENSE_XML = [
    ("PMC900001", "CC0",
     '<permissions><license xlink:href="https://creativecommons.org/publicdomain/zero/1.0/">'
     '<license-p>No rights reserved.</license-p></license></permissions>'),
    ("PMC900002", "CC_BY",
     '<permissions><license license-type="open-access" xlink:href="https://creativecommons.org/licenses/by/4.0/">'
     '<license-p>Open access.</license-p></license></permissions>'),
    ("PMC900003", "CC_BY_NC",
     '<permissions><license xlink:href="https://creativecommons.org/licenses/by-nc/4.0/">'
     '<license-p>Non-commercial use.</license-p></license></permissions>'),
    ("PMC900004", "CC0",
     '<permissions><ali:free_to_read/><license><ali:license_ref>'
     'http://creativecommons.org/publicdomain/zero/1.0/</ali:license_ref></license></permissions>'),
    ("PMC900005", "UNKNOWN", ""),
]

TOKEN_STRINGS = [
    "Gefitinib inhibits EGFR.", "non-small-cell lung carcinoma", "IL-6 and TNF-alpha",
    "  leading   and trailing  ", "p53/MDM2 axis", "HER2+ breast cancer", "5-FU (fluorouracil)",
    "CD8+ T-cells", "state-of-the-art", "A.B.C.", "x", "", "Résumé of naïve cells",
    "dose: 10mg/kg", "PD-L1 (22C3) TPS>=50%", "BRAF V600E", "ALK-positive NSCLC",
    "e.g. cisplatin, carboplatin", "It's the patient's choice", "Stage IIIA/N2 disease",
]

REGISTRY = [
    ("PMC100001", "CC0"), ("PMC100002", "CC BY"), ("PMC100003", "CC BY-NC"),
    ("PMC100004", "CC0"), ("PMC100005", "CC BY-NC-ND"), ("PMC100006", "CC BY"),
    ("PMC100007", "CC0"), ("PMC100008", "CC BY-SA"), ("PMC100009", None), ("PMC100010", "CC0"),
]
EXPECTED_TAG = {"CC0": "CC0", "CC BY": "CC_BY", "CC BY-NC": "CC_BY_NC", "CC BY-NC-ND": "CC_BY_NC",
                "CC BY-SA": "OTHER", None: "UNKNOWN"}

SENTENCES = [
    ("Gefitinib inhibits EGFR.", [("Gefitinib", "inhibits", "EGFR", 1.0)]),
    ("Cisplatin causes nephrotoxicity.", [("Cisplatin", "causes", "nephrotoxicity", 1.0)]),
    ("Osimertinib targets T790M mutations.", [("Osimertinib", "targets", "T790M mutations", 1.0)]),
    ("Crizotinib blocks ALK signaling.", [("Crizotinib", "blocks", "ALK signaling", 1.0),
                                          ("Crizotinib", "blocks", "signaling", 0.62)]),
    ("Smoking increases lung cancer risk.", [("Smoking", "increases", "lung cancer risk", 1.0)]),
    ("KRAS mutations predict poor response.", [("KRAS mutations", "predict", "poor response", 1.0)]),
    ("Bevacizumab binds VEGF-A.", [("Bevacizumab", "binds", "VEGF-A", 1.0)]),
    ("Nivolumab improved overall survival.", [("Nivolumab", "improved", "overall survival", 1.0)]),
    ("PD-L1 expression correlates with benefit.", [("PD-L1 expression", "correlates with", "benefit", 0.93)]),
    ("Docetaxel induces neutropenia.", [("Docetaxel", "induces", "neutropenia", 1.0)]),
    ("The trial enrolled 450 patients.", [("trial", "enrolled", "450 patients", 1.0)]),
    ("Radiotherapy reduced local recurrence.", [("Radiotherapy", "reduced", "local recurrence", 1.0)]),
    ("Pemetrexed is used in adenocarcinoma.", [("Pemetrexed", "is used in", "adenocarcinoma", 1.0)]),
    ("Results were inconclusive.", []),
    ("STK11 loss confers resistance to immunotherapy.",
     [("STK11 loss", "confers", "resistance to immunotherapy", 1.0),
      ("STK11 loss", "confers", "resistance", 0.71)]),
    ("Erlotinib prolonged progression-free survival.",
     [("Erlotinib", "prolonged", "progression-free survival", 1.0)]),
    ("ALK fusions occur in young nonsmokers.", [("ALK fusions", "occur in", "young nonsmokers", 1.0)]),
    ("Tumor hypoxia promotes metastasis.", [("Tumor hypoxia", "promotes", "metastasis", 1.0)]),
    ("Carboplatin was combined with paclitaxel.",
     [("Carboplatin", "was combined with", "paclitaxel", 1.0)]),
    ("MET amplification drives acquired resistance.",
     [("MET amplification", "drives", "acquired resistance", 1.0)]),
]


def corenlp_answer(triples):
    return {"sentences": [{"index": 0, "openie": [
        {"subject": s, "subjectSpan": [0, 1], "relation": r, "relationSpan": [1, 2],
         "object": o, "objectSpan": [2, 3], "confidence": c} for s, r, o, c in triples]}]}


def tokens(text):
    return [t.lower() for t in re.findall(rb"[0-9A-Za-z\x80-\xff]+", text.encode())]


def main(out):
    os.makedirs(f"{out}/license_xml", exist_ok=True)
    expected = {}
    for acc, tag, perm in LICENSE_XML:
        with open(f"{out}/license_xml/{acc}.xml", "w") as f:
            f.write(HEAD.format(id=acc, title=f"Fixture {acc}", perm=perm,
                                abstract="Lung cancer is common.", body="EGFR is mutated."))
        expected[acc] = tag
    json.dump(expected, open(f"{out}/license_xml/expected.json", "w"), indent=1, sort_keys=True)

    os.makedirs(f"{out}/archive", exist_ok=True)
    buf = io.BytesIO()
    with tarfile.open(fileobj=buf, mode="w:gz", format=tarfile.USTAR_FORMAT) as tar:
        members = [
            ("bundle/PMC800001.nxml", HEAD.format(id="PMC800001", title="Archived one", perm="",
                                                  abstract="Alpha.", body="Beta.").encode()),
            ("bundle/PMC800002.nxml", HEAD.format(id="PMC800002", title="Archived two", perm="",
                                                  abstract="Gamma.", body="Delta.").encode()),
            ("bundle/notes.txt", b"Plain text member.\n\nSecond paragraph.\n"),
            ("bundle/figure.png", b"\x89PNG\r\n\x1a\n"),
        ]
        for name, data in members:
            info = tarfile.TarInfo(name)
            info.size = len(data)
            info.mtime = 1700000000
            tar.addfile(info, io.BytesIO(data))
    with open(f"{out}/archive/bundle.tar.gz", "wb") as f:
        f.write(buf.getvalue())

    json.dump([{"text": s, "tokens": [t.decode() for t in tokens(s)]} for s in TOKEN_STRINGS],
              open(f"{out}/tokens_golden.json", "w"), indent=1, ensure_ascii=False)

    os.makedirs(f"{out}/registry", exist_ok=True)
    rec = {}
    for acc, lic in REGISTRY:
        if lic is None:
            body = (f'<OA><responseDate>2025-01-15 10:00:00</responseDate><request id="{acc}">'
                    f'https://www.ncbi.nlm.nih.gov/pmc/utils/oa/oa.fcgi?id={acc}</request>'
                    f'<error code="idIsNotOpenAccess">identifier \'{acc}\' is not Open Access</error></OA>')
        else:
            body = (f'<OA><responseDate>2025-01-15 10:00:00</responseDate><request id="{acc}">'
                    f'https://www.ncbi.nlm.nih.gov/pmc/utils/oa/oa.fcgi?id={acc}</request>'
                    f'<records returned-count="1" total-count="1"><record id="{acc}" '
                    f'citation="Fixture J. 2020;1:1" license="{lic}" retracted="no">'
                    f'<link format="tgz" href="ftp://example.invalid/{acc}.tar.gz"/></record></records></OA>')
        rec[acc] = {"body": body, "expected": EXPECTED_TAG[lic]}
    json.dump(rec, open(f"{out}/registry/oa_responses.json", "w"), indent=1, sort_keys=True)

    os.makedirs(f"{out}/openie", exist_ok=True)
    json.dump([{"sentence": s, "response": corenlp_answer(t),
                "triples": [{"subject": a, "relation": b, "object": c, "confidence": d}
                            for a, b, c, d in t]} for s, t in SENTENCES],
              open(f"{out}/openie/recorded.json", "w"), indent=1)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
