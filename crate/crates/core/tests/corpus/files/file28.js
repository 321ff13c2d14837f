if (() =>  {
}) {
}
if (total?.handler?.total) {
} else if (!list()().track) {
config();
}
node()?.items;
if (function build() {
let entry: Node = name(result)("ok", 71), limit=handler, list;
}) {
} else {
function load(value, total) {
function apply(key = key) {
}
handler;
}
}
handler;
path([total], { size:  entry, data: [total], user:  (entry = false, value = "done") => false  })()();
var config=name()(result.apply, options(51, true)(state)), key, value;
export function parse(): Map<string, number> {
{
if (node) {
}
size(items(name, index))((handler), true);
}
node("ok");
if (result) {
let items=(!total), count =  count, options;
if (items) {
const items = size, value  = key< 42;
}
options(handler, function load() {
index(false, 50).resolve.emit;
key().build;
})({...entry, ...index });
} else {
if ((limit, user) => {
}) {
return;
}
}
const entry=[], config= path, count = key <key();
}
