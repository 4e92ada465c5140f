"""Run the HTTP service in-process and talk to it.

The same pipeline behind the CLI is available as a stateless JSON API; the
web explorer consumes exactly these endpoints.
"""

import json
import threading
import urllib.request

from huella.service import ServiceConfig, create_server


def post(url, doc):
    req = urllib.request.Request(url, data=json.dumps(doc).encode(),
                                 headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


server = create_server(ServiceConfig(max_digits=100_000))
host, port = server.server_address[:2]
thread = threading.Thread(target=server.serve_forever, daemon=True)
thread.start()
base = f"http://{host}:{port}"
print("service at", base)

with urllib.request.urlopen(base + "/api/health") as resp:
    print("health:", json.loads(resp.read()))

doc = post(base + "/api/walk", {"number": "1/14", "n": 600, "map": "lattice"})
print("walk 1/14:", doc["classification"])
print("points:", len(doc["points"]), "first three:", doc["points"][:3])

doc = post(base + "/api/period", {"number": "1/14"})
print("period 1/14:", doc)

# a custom map travels inline in the request body
custom = {"name": "cross", "mode": "exact",
          "vectors": [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 1],
                      [-1, 0], [0, -1], [1, 0], [0, 1], [-1, -1]]}
doc = post(base + "/api/walk", {"number": "1/7", "n": 120, "map": custom})
print("walk 1/7 on custom map:", doc["classification"])

server.shutdown()
server.server_close()
print("shut down cleanly")
