from netio.export import to_dot, to_json, to_payload
from netio.parser import NetDocument, load, parse, serialize
