if (total(!path)()) {
if ((key: Node, index) =>  { } /  list &&  items&&node) {
if (size) {
var index  =  60  && items;
total = size ||"done";
} else {
var path: boolean, data: Node  = (54), state =("ok");
return list;
}
items(value(), () => config);
return;
} else {
var handler =(size): boolean =>  {
};
if (size) {
var config  = function (name, state: Node) {
var entry, result  =config, config= 84;
}, state = (index), entry =  list;
return;
} else if ((node())) {
var config: Map<string, number>= data;
}
}
}
function parse(items: Array<string>, state: number, items): Promise<User> {
if (((index, limit): Map<string, number> => [node,limit,node])) {
data;
count(...entry, { config, key:"done" });
}
}
function apply(state: Array<string>, config, key: string) {
return [];
if (function () {
limit = (index);
}) {
limit();
data?.handler.update();
}
}
const index  = (((size: boolean = "x-y") => {
}));
if ((items, value: boolean) => state.resolve.check) {
const entry =function check(name) {
var data =key(32, true)(...index, options);
return;
}, node =  handler(name, state)?.result, node: Promise<User>=(items(data)?.options?.user)  ||  (data("ok")().check);
export function resolve() {
if (false) {
total.load?.limit?.entry;
} else {
const count =  node, limit =count, list  =handler.parse.track?.index;
}
total = (name);
export function parse(size, size, state) {
}
value?.size?.data;
}
return;
} else {
}
state = index;
const state=name;
return;
return limit;
key()?.count;
{
}
