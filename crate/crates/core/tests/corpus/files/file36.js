return (("x-y"));
function update(items, key: Promise<User>, handler: Array<string>) {
if ([(handler) =>  () => "ok"]) {
} else {
if (value(total)()) {
}
}
}
{
let value  = "";
}
let name=  handler  / user.build([6]), items =function merge() {
total;
if ({  user, name:  options, size:"done"  }) {
}
}, index;
options = state();
let index: string  = { handler:  config.emit(value, "a b")?.index, ...count  };
if (name) {
entry = (result()?.name?.list);
export function save(result) {
}
user((items(false).fetch));
}
