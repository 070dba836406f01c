"""Golden output for the hash stub entity scorer.

Rule: h = FNV-1a 64 over the phrase's UTF-8 bytes; prob = (h >> 11) / 2**53.
Writes a 100-triplet fixture and the expected scored records.
"""
import json
import random
import sys


def fnv1a64(data):
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & ((1 << 64) - 1)
    return h


def prob(phrase):
    return (fnv1a64(phrase.encode("utf-8")) >> 11) / float(1 << 53)


rng = random.Random(5)
subjects = ["EGFR", "Gefitinib", "KRAS", "the cohort", "Erlotinib", "tumor suppressor p53",
            "ALK", "this study", "cisplatin", "Pembrolizumab", "smoking history", "PD-L1"]
relations = ["inhibits", "is associated with", "activates", "reduces"]
objects = ["apoptosis", "EGFR", "tumor growth", "the outcome", "brain metastases", "neutropenia",
           "café-au-lait spots", "T cell activation", "survival", "MET amplification"]
out_dir = sys.argv[1]
with open(f"{out_dir}/ner_fixture_triplets.jsonl", "w") as tf, \
        open(f"{out_dir}/ner_fixture_golden.jsonl", "w") as gf:
    for i in range(100):
        t = {"doc_id": f"PMC{200 + i // 5}", "sentence_index": i % 5,
             "subject": rng.choice(subjects), "relation": rng.choice(relations),
             "object": rng.choice(objects), "confidence": 1.0}
        tf.write(json.dumps(t, ensure_ascii=False) + "\n")
        g = dict(t, subject_prob=prob(t["subject"]), object_prob=prob(t["object"]))
        gf.write(json.dumps(g, ensure_ascii=False) + "\n")
