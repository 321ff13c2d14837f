export function resolve(handler) {
function apply(items, handler, path: string) {
const state: Map<string, number>  = (count: Node, config: Array<string>): Map<string, number> => {
}, result =  limit;
{
options.track;
const count =limit?.user(...data, ...value)(), name: string  = function () {
}, config = 36;
}
}
if ([62,{...list, ...result, total:options }]) {
config = function update() {
const value: Node = handler, handler  =  "done";
let limit=  "done";
};
if ("x-y") {
path;
data = user;
}
if (list(node, 3)) {
list = !handler;
name = (handler = options): Node =>  {
};
return total;
} else if ({ name: false  }) {
limit = false;
}
}
if (items) {
return () =>72 ||  list;
}
state(index).resolve;
}
var name  =(size, size: Array<string>) =>  (data) =>(path: Promise<User>) => {
};
{
}
state = false;
size;
if (entry) {
} else {
}
return !total;
return [{ ...data, ...key, name}];
config()().parse;
entry = function compute(index, value: boolean) {
}  ===  ({options, items, key  });
