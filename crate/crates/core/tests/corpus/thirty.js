var a = 1, b = 2, c = 3;
let total = a + b * c;
const names = ["ann", "bob", "cy"];
const empty = [];
function add(x: number, y: number): number {
  return x + y;
}
function noop() {}
export function greet(name: string) {
  return "hi " + name;
}
log(add(a, b));
log();
items.filter((x) => x > 1).map((x) => x * 2);
user?.profile.name;
const config = { debug: true, level: 3, ...defaults };
const point = { x, y };
if (total > 3) {
  log("big");
} else {
  log("small");
}
if (!ready) {
  wait(100);
}
handlers.on("open", function () {
  start();
});
handlers.on("close", () => stop());
result = compute(a, b, c, ...rest);
Object.assign({}, config, { extra: 1 });
let maybe = a && b || c;
const fn = (p: Array<string>) => p.length;
{
  let inner = 4;
  use(inner);
}
promise.then((v) => v).catch(report);
const nested = [[1, 2], [3], []];
emit("done", { at: now(), by: user.id });
count = count + 1;
return total;
let flags = !a === !b;
render(tree.root, { depth: 2 });
export function size(list: Array<number>) {
  return list.length;
}
