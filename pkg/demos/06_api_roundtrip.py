"""
Driving the HTTP API end to end
===============================

The same engine sits behind a small JSON API. This script boots the
server on a spare port, registers two sets, asks for a hierarchy and an
aligned comparison, and shuts the server down again. Everything a client
sees is in the response bodies; nothing is computed client-side.
"""

import json
import socket
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from scholarslice import load_corpus
from scholarslice.api import create_app

BASE = Path(__file__).resolve().parent.parent / "fixtures" / "corpus"
corpus = load_corpus(
    str(BASE / "papers.jsonl"),
    str(BASE / "citations.csv"),
    str(BASE / "venues.json"),
    str(BASE / "profiles.jsonl"),
)

# Pick a free port and run uvicorn in a background thread.
probe = socket.socket()
probe.bind(("127.0.0.1", 0))
port = probe.getsockname()[1]
probe.close()

server = uvicorn.Server(uvicorn.Config(create_app(corpus), host="127.0.0.1", port=port, log_level="warning"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.02)
root = f"http://127.0.0.1:{port}"


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(root + path, data=data, method=method)
    if data is not None:
        req.add_header("Content-Type", "application/json")
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


print("health:", call("GET", "/health"))

upper = call("POST", "/sets", {"labels": {"s01": "and"}})
lower = call("POST", "/sets", {"labels": {"s02": "and"}})
print(f"registered {upper['handle']} ({upper['label']}) and {lower['handle']} ({lower['label']})")

request = {"chain": ["P.Year", "P.CcfRank"], "mode": "papers", "measure": "papers"}
hierarchy = call("POST", f"/sets/{upper['handle']}/hierarchy", request)
print(f"hierarchy over {hierarchy['chain']}: root measure {hierarchy['root']['measure']}")

comparison = call(
    "POST",
    "/compare",
    {"upper": upper["handle"], "lower": lower["handle"], "lock": True, "align": True, "request": request},
)
print(f"aligned comparison: {comparison['description']['combined']}, {len(comparison['slots'])} slots")

# Roles were assigned by the comparison and show up in the set listing.
for entry in call("GET", "/sets")["sets"]:
    print(f"  {entry['handle']}: role={entry['role']}, {entry['paper_count']} papers")

server.should_exit = True
thread.join()
